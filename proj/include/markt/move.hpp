#pragma once

#include <cstddef>
#include <cstdint>

#include "markt/tary.hpp"

namespace markt {

enum class MoveKind { subtract, divide };

// One move in a (possibly single-component) sum: act on components[component],
// leaving `result` there. amount is the subtracted value, 0 for divide.
struct Move {
    std::size_t component;
    MoveKind kind;
    std::uint32_t amount;
    TaryNat result;
};

}  // namespace markt
