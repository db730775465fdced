// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "crg/cli.hpp"
#include "crg/fixpoint.hpp"
#include "crg/harness.hpp"
#include "crg/io.hpp"
#include "crg/random.hpp"
#include "crg/reductions.hpp"
#include "crg/solver.hpp"

using namespace crg;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

bool attractor_stable(const GameInstance& game, const RegionResult& region, BoundaryPolicy policy) {
    for (std::size_t c = 0; c < region.size(); ++c) {
        Configuration cfg = region.config_at(c);
        bool expected;
        if (objective_matches(game.objective, cfg)) {
            expected = true;
        } else {
            auto enabled = enabled_edges(game.system, game.semantics, cfg);
            if (enabled.empty()) {
                expected = game.system.locations[cfg.location].owner == Player::Opponent;
            } else {
                bool any = false, all = true;
                for (int e : enabled) {
                    Configuration succ = apply_edge(game.semantics, cfg, game.system.edges[e]);
                    auto idx = region.index_of(succ);
                    bool win = idx ? region.verdicts[*idx] == Verdict::Win
                                   : policy == BoundaryPolicy::Optimistic;
                    any = any || win;
                    all = all && win;
                }
                expected = game.system.locations[cfg.location].owner == Player::Reacher ? any : all;
            }
        }
        if (expected != (region.verdicts[c] == Verdict::Win)) return false;
    }
    return true;
}

// forced play reaches counter 2 at the decrement; no upward cycles, so the
// bounded oracle certifies both sides
GameInstance pump_to_two_game() {
    GameInstance g;
    g.semantics = Semantics::NonBlockingVass;
    g.system.dimension = 1;
    g.system.locations = {{"s", Player::Reacher}, {"t", Player::Reacher}, {"f", Player::Reacher}};
    g.system.edges = {{0, {1}, 1}, {1, {-1}, 2}, {2, {0}, 2}};
    g.initial = {0, {1}};
    g.objective = Objective::single({2, {1}});
    return g;
}

GameInstance power_jump_game(int n) {
    GameInstance g;
    g.semantics = Semantics::NonBlockingVass;
    g.system.dimension = 1;
    g.system.locations = {{"q0", Player::Reacher}, {"qf", Player::Reacher}};
    g.system.edges = {{0, {Counter{1} << n}, 1}, {1, {-1}, 1}};
    g.initial = {0, {0}};
    g.objective = Objective::single({1, {0}});
    return g;
}

// --- criterion 1: oracle integrity ------------------------------------

Check criterion1() {
    Check c;
    int win_configs = 0;
    const Semantics all_semantics[] = {Semantics::Z, Semantics::Vass, Semantics::NonBlockingVass};
    for (Semantics sem : all_semantics) {
        for (std::uint64_t seed = 0; seed < 200 && c.ok; ++seed) {
            GenParams p;
            p.semantics = sem;
            p.num_locations = 1 + static_cast<int>(seed % 5);
            p.label_bound = 1;
            p.edges_min = 1;
            p.edges_max = 3;
            p.objective_bound = 1;
            p.init_bound = 2;
            GameInstance g = generate(p, mix_seed(1000 + static_cast<int>(sem), seed));
            Window w = sem == Semantics::Z ? Window::uniform(1, -16, 16) : Window::uniform(1, 0, 32);

            RegionResult pess = solve_bounded(g, w, BoundaryPolicy::Pessimistic);
            RegionResult opt = solve_bounded(g, w, BoundaryPolicy::Optimistic);
            for (std::size_t i = 0; i < pess.size(); ++i)
                if (pess.verdicts[i] == Verdict::Win && opt.verdicts[i] != Verdict::Win) {
                    c.expect(false, "policy bracketing violated");
                    break;
                }
            c.expect(attractor_stable(g, pess, BoundaryPolicy::Pessimistic), "pessimistic not a fixpoint");
            c.expect(attractor_stable(g, opt, BoundaryPolicy::Optimistic), "optimistic not a fixpoint");

            RegionResult certain = certain_region(g, w);
            PositionalStrategy strat = extract_strategy(g, certain, Player::Reacher);
            const int max_steps = static_cast<int>(certain.size()) + 1;
            for (std::size_t i = 0; i < certain.size() && c.ok; ++i) {
                if (certain.verdicts[i] != Verdict::Win) continue;
                ++win_configs;
                Configuration start = certain.config_at(i);
                for (std::uint64_t play_seed = 0; play_seed < 100; ++play_seed) {
                    Play play = simulate(g, &strat, nullptr, start, max_steps,
                                         mix_seed(seed, play_seed));
                    if (!reacher_wins(play)) {
                        c.expect(false, "strategy lost a play");
                        break;
                    }
                }
            }
        }
    }
    c.detail << " 600 instances, " << win_configs << " certain-Win configs x100 plays";
    return c;
}

// --- criteria 2-5: reduction equivalences ------------------------------

Check check_verify(ReductionName name, VerifyOptions options, const char* what,
                   bool need_short_range, Check c = {}) {
    VerificationReport report = verify_reduction(name, options);
    c.expect(report.disagreements == 0, std::string(what) + " disagreements");
    c.expect(report.trials == report.agreements + report.disagreements + report.skipped_unknown,
             "trial accounting");
    c.expect(report.agreements > 0, std::string(what) + " no certain trials");
    for (const TrialRecord& r : report.records) {
        c.expect(r.target_valid, "target failed validation");
        if (need_short_range) c.expect(r.target_short_range, "short-range not preserved");
    }
    c.detail << " " << what << ": agree=" << report.agreements << " skip=" << report.skipped_unknown
             << ";";
    return c;
}

Check criterion2() {
    Check c;
    for (int d : {1, 2}) {
        VerifyOptions options;
        options.trials = 100;
        options.seed = 20 + d;
        options.gen.num_locations = 4;
        options.gen.dimension = d;
        options.gen.label_bound = 1;
        options.gen.edges_min = 1;
        options.gen.edges_max = 3;
        options.gen.objective_bound = 1;
        options.gen.init_bound = 2;
        options.source_window = Window::uniform(d, 0, 8);
        std::string what = "d=" + std::to_string(d);
        c = check_verify(ReductionName::VassToZ, options, what.c_str(), false, std::move(c));

        VerificationReport report = verify_reduction(ReductionName::VassToZ, options);
        for (const TrialRecord& r : report.records) {
            c.expect(r.target_locations <= d + 2 + r.source_locations + r.source_edges,
                     "|Q'| bound violated");
            c.expect(r.target_edges <= (d + 2) * r.source_edges + 2 * d * (d + 1) + 2,
                     "|E'| bound violated");
        }
    }
    return c;
}

Check criterion3() {
    VerifyOptions options;
    options.trials = 100;
    options.seed = 30;
    options.gen.num_locations = 4;
    options.gen.dimension = 2;
    options.gen.label_bound = 1;
    options.gen.edges_min = 1;
    options.gen.edges_max = 3;
    options.gen.init_bound = 2;
    options.source_window = Window::uniform(2, 0, 6);
    return check_verify(ReductionName::AxisZeroToSingle, options, "axis", true);
}

Check criterion4() {
    VerifyOptions options;
    options.trials = 100;
    options.seed = 40;
    options.gen.num_locations = 4;
    options.gen.label_bound = 1;
    options.gen.edges_min = 1;
    options.gen.edges_max = 3;
    options.gen.init_bound = 4;
    options.source_window = Window::uniform(1, -8, 8);
    return check_verify(ReductionName::ZToVass, options, "z-to-vass", true);
}

Check criterion5() {
    Check c;
    {
        VerifyOptions options;
        options.trials = 100;
        options.seed = 50;
        options.gen.num_locations = 4;
        options.gen.label_bound = 1;
        options.gen.edges_min = 1;
        options.gen.edges_max = 3;
        options.gen.init_bound = 4;
        options.source_window = Window::uniform(1, 0, 12);
        c = check_verify(ReductionName::Nb1ToVass0, options, "hardness", true, std::move(c));
    }
    {
        VerifyOptions options;
        options.trials = 100;
        options.seed = 51;
        options.gen.num_locations = 4;
        options.gen.label_bound = 3;
        options.gen.edges_min = 1;
        options.gen.edges_max = 3;
        options.gen.init_bound = 5;
        options.source_window = Window::uniform(1, 0, 12);
        c = check_verify(ReductionName::Vass0ToNb1, options, "membership", false, std::move(c));
    }
    // align variant of the hardness gadget: documented disagreement on the
    // crafted pump-to-two instance
    GameInstance g = pump_to_two_game();
    Window w = Window::uniform(1, 0, 8);
    Verdict source = certain_region(g, w).at(g.initial);
    ReductionOutput align = nbvass_one_to_vass_zero(g, GadgetVariant::Align);
    Verdict target = certain_region(align.game, derive_target_window(align.game, w)).at(align.game.initial);
    c.expect(source == Verdict::Win && target == Verdict::Lose, "align counterexample missing");
    c.detail << " align-variant disagreement on crafted instance: source=" << to_string(source)
             << " target=" << to_string(target);
    return c;
}

// --- criterion 6: downward closure -------------------------------------

Check criterion6() {
    Check c;
    for (std::uint64_t seed = 0; seed < 200 && c.ok; ++seed) {
        GenParams p;
        p.semantics = Semantics::NonBlockingVass;
        p.num_locations = 1 + static_cast<int>(seed % 5);
        p.label_bound = 1;
        p.edges_min = 1;
        p.edges_max = 3;
        p.objective_bound = 0;
        p.init_bound = 2;
        GameInstance g = generate(p, mix_seed(60, seed));
        RegionResult region = certain_region(g, Window::uniform(1, 0, 16));
        c.expect(check_downward_closure(g, region).empty(), "downward closure violated");
    }
    c.detail << " 200 NB zero-objective instances";
    return c;
}

// --- criterion 7: fixpoint pipeline vs oracle ---------------------------

Check criterion7() {
    Check c;
    int compared = 0, unknown = 0;
    for (std::uint64_t seed = 0; seed < 300 && c.ok; ++seed) {
        GenParams p;
        p.semantics = Semantics::NonBlockingVass;
        p.num_locations = 1 + static_cast<int>(seed % 5);
        p.label_bound = 1;
        p.edges_min = 1;
        p.edges_max = 3;
        p.objective_bound = 0;
        p.init_bound = 2;
        GameInstance g = generate(p, mix_seed(70, seed));
        for (Counter x0 = 0; x0 <= 8 && c.ok; ++x0) {
            RegionResult region = certain_region(g, Window::uniform(1, 0, x0 + 16));
            for (int q = 0; q < p.num_locations; ++q) {
                g.initial = {q, {x0}};
                Decision d = decide_nbvass_zero(g);
                Verdict oracle = region.at(g.initial);
                if (d.verdict == Verdict::Win && oracle == Verdict::Lose) {
                    c.expect(false, "unsound Win (EarlyYes vs certain-Lose)");
                    break;
                }
                if (d.verdict == Verdict::Lose && oracle == Verdict::Win) {
                    c.expect(false, "unsound Lose (clean fixpoint vs certain-Win)");
                    break;
                }
                if (d.verdict == Verdict::Unknown || oracle == Verdict::Unknown)
                    ++unknown;
                else
                    ++compared;
            }
        }
    }
    c.expect(compared > 1000, "too few certain comparisons");
    c.detail << " " << compared << " certain comparisons, " << unknown << " skipped";
    return c;
}

// --- criterion 8: exponential example ----------------------------------

Check criterion8() {
    Check c;
    for (int n : {3, 4, 5, 6}) {
        GameInstance g = power_jump_game(n);
        Decision d = decide_nbvass_zero(g);
        const Counter expect = Counter{1} << n;
        c.expect(d.verdict == Verdict::Win, "2^n instance not Win");
        c.expect(d.peak_rounds >= expect && d.peak_rounds <= expect + 2, "round count off");
        c.detail << " n=" << n << ":rounds=" << d.peak_rounds;
    }
    return c;
}

// --- criterion 9: determinism and roundtrip ----------------------------

Check criterion9() {
    Check c;
    for (std::uint64_t seed = 0; seed < 1000 && c.ok; ++seed) {
        GenParams p;
        p.num_locations = 1 + static_cast<int>(seed % 6);
        p.dimension = seed % 4 == 0 ? 2 : 1;
        p.label_bound = static_cast<Counter>(seed % 3);
        p.edges_max = 3;
        p.semantics = seed % 3 == 0   ? Semantics::Z
                      : seed % 3 == 1 ? Semantics::Vass
                                      : Semantics::NonBlockingVass;
        if (seed % 7 == 0) p.objective_kind = Objective::Kind::LocationsAtZero;
        GameInstance g = generate(p, seed);
        std::string text = serialize(g);
        c.expect(serialize(parse(text)) == text, "roundtrip broke");
        c.expect(serialize(generate(p, seed)) == text, "generator not deterministic");
    }

    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::pair<int, std::string>(code, out.str());
    };
    auto gen1 = run({"gen", "--seed", "7", "--locations", "5", "--semantics", "nbvass"});
    auto gen2 = run({"gen", "--seed", "7", "--locations", "5", "--semantics", "nbvass"});
    c.expect(gen1.first == 0 && gen1.second == gen2.second, "gen output not byte-identical");

    auto v1 = run({"verify", "vass0-to-nb1", "--trials", "25", "--seed", "4"});
    auto v2 = run({"verify", "vass0-to-nb1", "--trials", "25", "--seed", "4"});
    c.expect(v1.first == 0 && v1.second == v2.second, "verify report not byte-identical");

    c.detail << " 1000 roundtrips; gen/verify reports byte-identical";
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Check (*fn)();
        double max_seconds;  // 0 = no limit
    };
    const Entry entries[] = {
        {"criterion-1 oracle integrity (bracketing, fixpoint, strategies)", criterion1, 60},
        {"criterion-2 vass->z equivalence and size bounds", criterion2, 180},
        {"criterion-3 axis-zero->single equivalence, short-range kept", criterion3, 0},
        {"criterion-4 z->vass equivalence, short-range VASS output", criterion4, 0},
        {"criterion-5 hardness/membership gadgets, align counterexample", criterion5, 0},
        {"criterion-6 downward closure of certain regions", criterion6, 0},
        {"criterion-7 fixpoint pipeline vs oracle, zero unsound answers", criterion7, 0},
        {"criterion-8 exponential iteration count example", criterion8, 5},
        {"criterion-9 determinism and serialization roundtrip", criterion9, 0},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = entry.fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << " [exception: " << e.what() << "]";
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (entry.max_seconds > 0 && seconds > entry.max_seconds) {
            c.ok = false;
            c.detail << " [over the " << entry.max_seconds << "s budget]";
        }
        std::cout << (c.ok ? "PASS " : "FAIL ") << entry.name << " (" << c.detail.str() << " ) ["
                  << seconds << "s]" << std::endl;
        failures += c.ok ? 0 : 1;
    }
    return failures;
}
