// markt - analyze and play Mark-t: subtract 1..t-1 or divide by t (floor),
// on one game or a sum of games of arbitrary size.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "markt/grundy.hpp"
#include "markt/misere.hpp"
#include "markt/oracle.hpp"
#include "markt/sums.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace markt;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;

struct CommonOpts {
    std::uint32_t t = 0;
    bool base_t_input = false;
    bool json_output = false;
    std::vector<std::string> positions;
};

Format input_format(const CommonOpts& o) {
    return o.base_t_input ? Format::base_t : Format::decimal;
}

SumPosition parse_positions(const CommonOpts& o) {
    Radix radix(o.t);
    SumPosition s;
    s.reserve(o.positions.size());
    for (const std::string& text : o.positions)
        s.push_back(parse_position(text, radix, input_format(o)));
    return s;
}

std::uint64_t oracle_limit_from_env() {
    const char* env = std::getenv("MARKT_ORACLE_LIMIT");
    if (env == nullptr) return OracleSession::default_limit;
    std::uint64_t v = 0;
    std::string_view text(env);
    if (text.empty()) throw std::invalid_argument("MARKT_ORACLE_LIMIT: empty value");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("MARKT_ORACLE_LIMIT: not a number");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::string describe_action(const Move& m, Format f) {
    std::string out = m.kind == MoveKind::subtract
                          ? "subtract " + std::to_string(m.amount)
                          : std::string("divide");
    out += " -> " + format_position(m.result, f);
    return out;
}

json move_to_json(const Move& m, Format f) {
    json j;
    j["component"] = m.component;
    j["action"] = m.kind == MoveKind::subtract ? "subtract" : "divide";
    if (m.kind == MoveKind::subtract) j["amount"] = m.amount;
    j["result"] = format_position(m.result, f);
    return j;
}

// ---------------------------------------------------------------------------
// grundy

int run_grundy(const CommonOpts& o) {
    SumPosition positions = parse_positions(o);
    Format f = input_format(o);
    if (o.json_output) {
        json j;
        j["t"] = o.t;
        j["results"] = json::array();
        for (const TaryNat& x : positions) {
            json row;
            row["n"] = format_position(x, f);
            row["g"] = grundy(x);
            j["results"].push_back(std::move(row));
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const TaryNat& x : positions) std::cout << grundy(x) << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// outcome / move

int run_outcome(const CommonOpts& o, bool with_move) {
    SumPosition s = parse_positions(o);
    Format f = input_format(o);
    GrundyValue nim = sum_grundy(s);
    Outcome outcome = nim == 0 ? Outcome::P : Outcome::N;
    std::optional<Move> mv;
    if (with_move && !s.empty() && nim != 0) mv = winning_move(s);

    if (o.json_output) {
        json j;
        j["t"] = o.t;
        j["positions"] = json::array();
        for (const TaryNat& x : s) j["positions"].push_back(format_position(x, f));
        j["nim_value"] = nim;
        j["outcome"] = to_string(outcome);
        if (with_move) j["move"] = mv ? move_to_json(*mv, f) : json(nullptr);
        std::cout << j.dump() << "\n";
        return exit_ok;
    }

    std::cout << to_string(outcome) << " (nim-value " << nim << ")";
    if (with_move && !s.empty()) {
        if (mv)
            std::cout << "; component " << mv->component << ": "
                      << describe_action(*mv, f);
        else
            std::cout << "; no winning move";
    }
    std::cout << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// misere

int run_misere(const CommonOpts& o) {
    if (o.positions.size() != 1) {
        std::cerr << "error: misere analysis takes exactly one position; sums of "
                     "misere games have no composition theory here\n";
        return exit_usage;
    }
    TaryNat x = parse_positions(o).front();
    Format f = input_format(o);
    Outcome outcome = misere_outcome(x);
    std::optional<Move> mv = misere_winning_move(x);

    if (o.json_output) {
        json j;
        j["t"] = o.t;
        j["n"] = format_position(x, f);
        j["outcome"] = to_string(outcome);
        j["game_over"] = x.is_zero();
        j["move"] = mv ? move_to_json(*mv, f) : json(nullptr);
        std::cout << j.dump() << "\n";
        return exit_ok;
    }

    if (x.is_zero())
        std::cout << "N (game over: mover wins)\n";
    else if (outcome == Outcome::P)
        std::cout << "P\n";
    else
        std::cout << "N; " << describe_action(*mv, f) << "\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(std::uint32_t t, std::uint64_t limit, const std::string& mode) {
    Radix radix(t);
    OracleSession oracle(radix, oracle_limit_from_env());

    if (mode == "sums") {
        if (limit > oracle.sum_component_cap()) {
            std::cerr << "error: sums mode is capped at components <= "
                      << oracle.sum_component_cap() << "\n";
            return exit_usage;
        }
        for (std::uint64_t a = 0; a <= limit; ++a) {
            for (std::uint64_t b = a; b <= limit; ++b) {
                std::uint64_t pair[] = {a, b};
                std::uint32_t direct = oracle.sum_grundy(pair);
                std::uint32_t via_xor = grundy(TaryNat::from_value(a, radix)) ^
                                        grundy(TaryNat::from_value(b, radix));
                if (direct != via_xor) {
                    std::cout << "mismatch: a=" << a << " b=" << b
                              << " game-tree=" << direct << " xor=" << via_xor << "\n";
                    return exit_mismatch;
                }
            }
        }
        std::cout << "verify sums t=" << t << " pairs<=" << limit << ": OK\n";
        return exit_ok;
    }

    if (limit > oracle.limit()) {
        std::cerr << "error: limit " << limit << " exceeds the oracle bound "
                  << oracle.limit() << "\n";
        return exit_usage;
    }

    if (mode == "misere") {
        for (std::uint64_t n = 0; n <= limit; ++n) {
            Outcome fast = misere_outcome(TaryNat::from_value(n, radix));
            Outcome slow = oracle.misere_outcome(n);
            if (fast != slow) {
                std::cout << "mismatch: n=" << n << " closed-form="
                          << to_string(fast) << " oracle=" << to_string(slow) << "\n";
                return exit_mismatch;
            }
        }
        std::cout << "verify misere t=" << t << " n<=" << limit << ": OK\n";
        return exit_ok;
    }

    for (std::uint64_t n = 0; n <= limit; ++n) {
        GrundyValue fast = grundy(TaryNat::from_value(n, radix));
        std::uint32_t slow = oracle.grundy(n);
        if (fast != slow) {
            std::cout << "mismatch: n=" << n << " fast=" << fast
                      << " oracle=" << slow << "\n";
            return exit_mismatch;
        }
    }
    std::cout << "verify normal t=" << t << " n<=" << limit << ": OK\n";
    return exit_ok;
}

// ---------------------------------------------------------------------------
// bench

// Random canonical digit string, conditioned (for t >= 3) on an even trailing
// run of a digit <= t-2. Unconditioned strings take the O(length) classifier
// exit about half the time, which makes the per-length median flip between the
// linear and quadratic regimes; the even-run shape drives the full rewrite
// loop on every sample.
TaryNat random_bench_input(std::mt19937_64& rng, Radix radix, std::size_t length) {
    const std::uint32_t t = radix.t;
    std::uniform_int_distribution<std::uint32_t> dig(0, t - 1);
    std::uniform_int_distribution<std::uint32_t> top(1, t - 1);
    std::vector<std::uint32_t> d(length);
    for (std::size_t j = 0; j + 1 < length; ++j) d[j] = dig(rng);
    d[length - 1] = top(rng);
    if (t >= 3 && length >= 2) {
        std::uint32_t lo = length == 2 ? 1 : 0;
        std::uniform_int_distribution<std::uint32_t> run_digit(lo, t - 2);
        std::uint32_t k = run_digit(rng);
        d[0] = d[1] = k;
        if (length >= 3 && d[2] == k) d[2] = k + 1;
    }
    return TaryNat::from_digits(std::move(d), radix);
}

int run_bench(std::uint32_t t, const std::vector<std::size_t>& lengths,
              std::size_t samples, std::uint64_t seed) {
    Radix radix(t);
    std::mt19937_64 rng(seed);
    volatile GrundyValue sink = 0;
    std::cout << "length,median_ns,mean_ns\n";
    for (std::size_t length : lengths) {
        std::vector<TaryNat> inputs;
        inputs.reserve(samples);
        for (std::size_t j = 0; j < samples; ++j)
            inputs.push_back(random_bench_input(rng, radix, length));
        std::vector<std::uint64_t> ns(samples);
        for (std::size_t j = 0; j < samples; ++j) {
            auto start = std::chrono::steady_clock::now();
            sink = sink + grundy(inputs[j]);
            auto stop = std::chrono::steady_clock::now();
            ns[j] = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                    .count());
        }
        std::sort(ns.begin(), ns.end());
        std::uint64_t median = samples % 2 == 1
                                   ? ns[samples / 2]
                                   : (ns[samples / 2 - 1] + ns[samples / 2]) / 2;
        std::uint64_t total = 0;
        for (std::uint64_t v : ns) total += v;
        std::cout << length << "," << median << "," << total / samples << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// play

void print_components(const SumPosition& s, std::uint32_t t) {
    if (s.empty()) {
        std::cout << "position: (empty sum)\n";
        return;
    }
    std::cout << "position:\n";
    for (std::size_t j = 0; j < s.size(); ++j) {
        std::cout << "  [" << j << "] " << format_position(s[j], Format::base_t)
                  << " (base " << t << ") = "
                  << format_position(s[j], Format::decimal) << "\n";
    }
}

bool all_done(const SumPosition& s) {
    for (const TaryNat& c : s)
        if (!c.is_zero()) return false;
    return true;
}

Move engine_move(const SumPosition& s, bool misere) {
    std::optional<Move> m =
        misere ? misere_winning_move(s.front()) : winning_move(s);
    if (m) return *m;
    // Losing side: divide on the largest component to shorten the game. Any
    // legal move is equivalent under perfect opposing play.
    std::size_t pick = s.size();
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j].is_zero()) continue;
        if (pick == s.size() || value_less(s[pick], s[j])) pick = j;
    }
    return Move{pick, MoveKind::divide, 0, div_by_t(s[pick])};
}

bool parse_human_move(const std::string& line, const SumPosition& s, Move& out,
                      std::string& err) {
    std::istringstream in(line);
    std::string idx_tok, act_tok;
    if (!(in >> idx_tok >> act_tok)) {
        err = "expected `<component> s<amount>` or `<component> d`";
        return false;
    }
    std::size_t idx = 0;
    try {
        idx = std::stoul(idx_tok);
    } catch (const std::exception&) {
        err = "component index is not a number";
        return false;
    }
    if (idx >= s.size()) {
        err = "no component " + idx_tok;
        return false;
    }
    const TaryNat& c = s[idx];
    const std::uint32_t t = c.radix().t;

    if (act_tok == "d" || act_tok == "div" || act_tok == "divide") {
        if (c.is_zero()) {
            err = "component " + idx_tok + " is 0 and has no moves";
            return false;
        }
        out = Move{idx, MoveKind::divide, 0, div_by_t(c)};
        return true;
    }
    if (act_tok[0] == 's') {
        std::string amt_tok = act_tok.substr(1);
        if (amt_tok.empty() && !(in >> amt_tok)) {
            err = "missing subtraction amount";
            return false;
        }
        std::uint64_t amount = 0;
        try {
            amount = std::stoull(amt_tok);
        } catch (const std::exception&) {
            err = "subtraction amount is not a number";
            return false;
        }
        if (amount < 1 || amount > t - 1) {
            err = "amount must be between 1 and " + std::to_string(t - 1);
            return false;
        }
        if (c.is_zero() || (c.length() == 1 && c.digits()[0] < amount)) {
            err = "component " + idx_tok + " is smaller than the amount";
            return false;
        }
        out = Move{idx, MoveKind::subtract, static_cast<std::uint32_t>(amount),
                   sub_small(c, static_cast<std::uint32_t>(amount))};
        return true;
    }
    err = "unknown action `" + act_tok + "` (use s<amount> or d)";
    return false;
}

int run_play(const CommonOpts& o, const std::string& mode, bool engine_first) {
    const bool misere = mode == "misere";
    SumPosition s = parse_positions(o);
    if (misere && s.size() != 1) {
        std::cerr << "error: misere play requires exactly one component\n";
        return exit_usage;
    }
    std::cout << (misere ? "misere play: the player unable to move wins.\n"
                         : "normal play: the player unable to move loses.\n");

    bool humans_turn = !engine_first;
    for (;;) {
        print_components(s, o.t);
        if (all_done(s)) {
            if (humans_turn)
                std::cout << (misere ? "no moves remain: you win.\n"
                                     : "no moves remain: you lose.\n");
            else
                std::cout << (misere ? "no moves remain: engine wins - you lose.\n"
                                     : "no moves remain: engine loses - you win.\n");
            return exit_ok;
        }
        if (humans_turn) {
            std::cout << "your move (`<component> s<amount>` or `<component> d`, "
                         "`q` quits): "
                      << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                std::cout << "\nend of input: session closed.\n";
                return exit_ok;
            }
            if (line == "q" || line == "quit") {
                std::cout << "session closed.\n";
                return exit_ok;
            }
            Move mv{0, MoveKind::divide, 0, TaryNat(Radix(o.t))};
            std::string err;
            if (!parse_human_move(line, s, mv, err)) {
                std::cout << "illegal move: " << err << "\n";
                continue;
            }
            std::cout << "you: component " << mv.component << ": "
                      << describe_action(mv, Format::decimal) << "\n";
            s[mv.component] = mv.result;
        } else {
            Move mv = engine_move(s, misere);
            std::cout << "engine: component " << mv.component << ": "
                      << describe_action(mv, Format::decimal) << "\n";
            s[mv.component] = mv.result;
        }
        humans_turn = !humans_turn;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mark-t solver: grundy values, outcomes, winning moves"};
    app.require_subcommand(1);

    CommonOpts grundy_opts, outcome_opts, move_opts, misere_opts, play_opts;
    std::uint32_t verify_t = 0, bench_t = 0;
    std::uint64_t verify_limit = 50'000;
    std::string verify_mode = "normal";
    std::vector<std::size_t> bench_lengths = {1024, 2048, 4096, 8192};
    std::size_t bench_samples = 9;
    std::uint64_t bench_seed = 0;
    std::string play_mode = "normal";
    bool play_engine_first = false;

    auto add_common = [](CLI::App* cmd, CommonOpts& o, bool with_json) {
        cmd->add_option("-t", o.t, "game base (>= 2)")->required();
        cmd->add_flag("--base-t", o.base_t_input,
                      "read positions as base-t digit strings");
        if (with_json) cmd->add_flag("--json", o.json_output, "emit JSON");
        cmd->add_option("positions", o.positions, "positions");
    };

    CLI::App* cmd_grundy = app.add_subcommand("grundy", "grundy value per position");
    add_common(cmd_grundy, grundy_opts, true);

    CLI::App* cmd_outcome =
        app.add_subcommand("outcome", "nim-value and P/N of a sum");
    add_common(cmd_outcome, outcome_opts, true);

    CLI::App* cmd_move =
        app.add_subcommand("move", "nim-value, P/N and a winning move for a sum");
    add_common(cmd_move, move_opts, true);

    CLI::App* cmd_misere =
        app.add_subcommand("misere", "misere outcome of a single game");
    add_common(cmd_misere, misere_opts, true);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "sweep the fast path against the oracle");
    cmd_verify->add_option("-t", verify_t, "game base (>= 2)")->required();
    cmd_verify->add_option("--limit", verify_limit, "sweep n = 0..limit");
    cmd_verify->add_option("--mode", verify_mode, "normal | misere | sums")
        ->check(CLI::IsMember({"normal", "misere", "sums"}));

    CLI::App* cmd_bench =
        app.add_subcommand("bench", "time grundy on random digit strings (CSV)");
    cmd_bench->add_option("-t", bench_t, "game base (>= 2)")->required();
    cmd_bench->add_option("--lengths", bench_lengths, "digit lengths")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("--samples", bench_samples, "samples per length")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("--seed", bench_seed, "PRNG seed");

    CLI::App* cmd_play = app.add_subcommand("play", "interactive game vs the engine");
    add_common(cmd_play, play_opts, false);
    cmd_play->add_option("--mode", play_mode, "normal | misere")
        ->check(CLI::IsMember({"normal", "misere"}));
    cmd_play->add_flag("--engine-first", play_engine_first, "engine moves first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(cmd_grundy)) return run_grundy(grundy_opts);
        if (app.got_subcommand(cmd_outcome)) return run_outcome(outcome_opts, false);
        if (app.got_subcommand(cmd_move)) return run_outcome(move_opts, true);
        if (app.got_subcommand(cmd_misere)) return run_misere(misere_opts);
        if (app.got_subcommand(cmd_verify))
            return run_verify(verify_t, verify_limit, verify_mode);
        if (app.got_subcommand(cmd_bench))
            return run_bench(bench_t, bench_lengths, bench_samples, bench_seed);
        if (app.got_subcommand(cmd_play))
            return run_play(play_opts, play_mode, play_engine_first);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
