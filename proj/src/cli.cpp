#include "crg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "crg/fixpoint.hpp"
#include "crg/harness.hpp"
#include "crg/io.hpp"
#include "crg/reductions.hpp"
#include "crg/solver.hpp"

namespace crg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitDisagreement = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "lo:hi[,lo:hi]"; a single segment applies to every dimension
Window parse_window(const std::string& spec, int dimension) {
    Window w;
    std::istringstream in(spec);
    std::string segment;
    while (std::getline(in, segment, ',')) {
        auto colon = segment.find(':');
        if (colon == std::string::npos) throw std::runtime_error("window segment needs lo:hi");
        w.bounds.emplace_back(std::stoll(segment.substr(0, colon)), std::stoll(segment.substr(colon + 1)));
    }
    if (w.bounds.size() == 1 && dimension > 1) w.bounds.assign(static_cast<size_t>(dimension), w.bounds[0]);
    if (static_cast<int>(w.bounds.size()) != dimension)
        throw std::runtime_error("window has wrong number of dimensions");
    return w;
}

Window pick_window(const std::string& spec, const GameInstance& game) {
    return spec.empty() ? Window::default_for(game) : parse_window(spec, game.system.dimension);
}

GadgetVariant parse_variant(const std::string& name) {
    if (name == "figure") return GadgetVariant::Figure;
    if (name == "align") return GadgetVariant::Align;
    throw std::runtime_error("variant must be figure or align");
}

void dump_region(std::ostream& out, const GameInstance& game, const RegionResult& region) {
    for (std::size_t c = 0; c < region.size(); ++c) {
        Configuration cfg = region.config_at(c);
        out << "config " << game.system.locations[static_cast<size_t>(cfg.location)].name;
        for (Counter x : cfg.counters) out << ' ' << x;
        out << ' ' << to_string(region.verdicts[c]) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"counter reachability games: bounded oracle, reductions, fixpoint"};
    app.require_subcommand(1);

    std::string in_path, out_path, window_spec, variant_name = "figure", strategic = "none";
    std::uint64_t seed = 1;
    int trials = 100, steps = 200;
    std::int64_t cap = -1, max_rounds = -1;
    std::string reduction_name;

    GenParams gen;
    std::string gen_semantics = "z", gen_objective = "single";

    auto add_in = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input instance file")->required();
    };

    CLI::App* solve = app.add_subcommand("solve", "classify the initial configuration with the bounded oracle");
    add_in(solve);
    solve->add_option("--window", window_spec, "counter window lo:hi[,lo:hi]");

    CLI::App* decide = app.add_subcommand("decide-nb0", "non-blocking VASS zero-reachability fixpoint pipeline");
    add_in(decide);
    decide->add_option("--cap", cap, "value cap (default derived)");
    decide->add_option("--max-rounds", max_rounds, "round limit (default derived)");

    CLI::App* transform = app.add_subcommand("transform", "apply a reduction and emit the transformed instance");
    transform->add_option("reduction", reduction_name, "one of the reduction names")->required();
    add_in(transform);
    transform->add_option("--variant", variant_name, "figure|align gadget variant");
    transform->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "oracle-equivalence harness for a reduction");
    verify->add_option("reduction", reduction_name, "one of the reduction names")->required();
    verify->add_option("--trials", trials, "number of seeded trials");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--variant", variant_name, "figure|align gadget variant");
    verify->add_option("--locations", gen.num_locations, "locations per generated instance");
    verify->add_option("--dim", gen.dimension, "dimension of generated instances");
    verify->add_option("--label-bound", gen.label_bound, "max |label component|");
    verify->add_option("--init-bound", gen.init_bound, "max |initial counter|");
    verify->add_option("--edges-min", gen.edges_min, "min out-degree");
    verify->add_option("--edges-max", gen.edges_max, "max out-degree");
    verify->add_option("--window", window_spec, "source-side window lo:hi[,lo:hi]");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
    gen_cmd->add_option("--seed", seed, "seed");
    gen_cmd->add_option("--locations", gen.num_locations, "number of locations");
    gen_cmd->add_option("--dim", gen.dimension, "dimension");
    gen_cmd->add_option("--label-bound", gen.label_bound, "max |label component|");
    gen_cmd->add_option("--edges-min", gen.edges_min, "min out-degree");
    gen_cmd->add_option("--edges-max", gen.edges_max, "max out-degree");
    gen_cmd->add_option("--init-bound", gen.init_bound, "max |initial counter|");
    gen_cmd->add_option("--objective-bound", gen.objective_bound, "max objective counter");
    gen_cmd->add_option("--semantics", gen_semantics, "z|vass|nbvass");
    gen_cmd->add_option("--objective", gen_objective, "single|zeroset|axiszero");
    gen_cmd->add_flag("--reacher-objective", gen.force_reacher_objective, "pin objective location(s) to Reacher");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "play the game with seeded random or extracted strategies");
    add_in(simulate_cmd);
    simulate_cmd->add_option("--seed", seed, "seed");
    simulate_cmd->add_option("--steps", steps, "step limit");
    simulate_cmd->add_option("--strategic", strategic, "none|reacher|opponent|both: use extracted strategies");
    simulate_cmd->add_option("--window", window_spec, "window for strategy extraction");

    CLI::App* region = app.add_subcommand("region-dump", "dump the certain region, one line per configuration");
    add_in(region);
    region->add_option("--window", window_spec, "counter window lo:hi[,lo:hi]");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            GameInstance game = parse(read_file(in_path));
            RegionResult r = certain_region(game, pick_window(window_spec, game));
            Verdict v = r.at(game.initial);
            out << "winner: " << (v == Verdict::Win ? "reacher" : v == Verdict::Lose ? "opponent" : "unknown")
                << "\n";
            out << ":: verdict " << to_string(v) << "\n";
            return v == Verdict::Unknown ? kExitUnknown : kExitOk;
        }

        if (decide->parsed()) {
            GameInstance game = parse(read_file(in_path));
            FixpointParams params = FixpointParams::defaults(game.system, game.initial.counters.at(0));
            if (cap >= 0) params.cap = cap;
            if (max_rounds >= 0) params.max_rounds = max_rounds;
            Decision d = decide_nbvass_zero(game, params);
            out << "decision: " << to_string(d.verdict) << "\n";
            out << "# " << d.explain << "\n";
            out << format_value_table(game.system, d.final_stage.table);
            out << ":: decision " << to_string(d.verdict) << " rounds=" << d.peak_rounds << "\n";
            return d.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
        }

        if (transform->parsed()) {
            auto name = reduction_from_string(reduction_name);
            if (!name) throw std::runtime_error("unknown reduction '" + reduction_name + "'");
            GameInstance game = parse(read_file(in_path));
            ReductionOutput reduced = apply_reduction(*name, game, parse_variant(variant_name));
            std::ostringstream text;
            for (const std::string& n : reduced.notes) text << "# note: " << n << "\n";
            text << serialize(reduced.game);
            if (out_path.empty()) {
                out << text.str();
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
                f << text.str();
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            auto name = reduction_from_string(reduction_name);
            if (!name) throw std::runtime_error("unknown reduction '" + reduction_name + "'");
            VerifyOptions options;
            options.gen = gen;
            options.trials = trials;
            options.seed = seed;
            options.variant = parse_variant(variant_name);
            if (!window_spec.empty()) {
                GenParams conformed = conform_params(*name, gen);
                options.source_window = parse_window(window_spec, conformed.dimension);
            }
            VerificationReport report = verify_reduction(*name, options);
            out << render_report(report);
            return report.disagreements > 0 ? kExitDisagreement : kExitOk;
        }

        if (gen_cmd->parsed()) {
            if (gen_semantics == "z")
                gen.semantics = Semantics::Z;
            else if (gen_semantics == "vass")
                gen.semantics = Semantics::Vass;
            else if (gen_semantics == "nbvass")
                gen.semantics = Semantics::NonBlockingVass;
            else
                throw std::runtime_error("semantics must be z|vass|nbvass");
            if (gen_objective == "single")
                gen.objective_kind = Objective::Kind::SingleConfig;
            else if (gen_objective == "zeroset")
                gen.objective_kind = Objective::Kind::LocationsAtZero;
            else if (gen_objective == "axiszero")
                gen.objective_kind = Objective::Kind::AxisZero;
            else
                throw std::runtime_error("objective must be single|zeroset|axiszero");
            out << serialize(generate(gen, seed));
            return kExitOk;
        }

        if (simulate_cmd->parsed()) {
            GameInstance game = parse(read_file(in_path));
            PositionalStrategy reacher_strat, opponent_strat;
            const PositionalStrategy* rp = nullptr;
            const PositionalStrategy* op = nullptr;
            if (strategic != "none") {
                if (strategic != "reacher" && strategic != "opponent" && strategic != "both")
                    throw std::runtime_error("--strategic must be none|reacher|opponent|both");
                RegionResult r = certain_region(game, pick_window(window_spec, game));
                if (strategic != "opponent") {
                    reacher_strat = extract_strategy(game, r, Player::Reacher);
                    rp = &reacher_strat;
                }
                if (strategic != "reacher") {
                    opponent_strat = extract_strategy(game, r, Player::Opponent);
                    op = &opponent_strat;
                }
            }
            Play play = simulate(game, rp, op, game.initial, steps, seed);
            for (size_t i = 0; i < play.configs.size(); ++i) {
                out << "step " << i << ' ' << game.system.locations[static_cast<size_t>(play.configs[i].location)].name;
                for (Counter x : play.configs[i].counters) out << ' ' << x;
                out << "\n";
            }
            const char* status = play.status == Play::Status::ReachedObjective ? "reached-objective"
                                 : play.status == Play::Status::StepLimit      ? "step-limit"
                                 : play.deadlock_loser == Player::Reacher      ? "deadlock-reacher"
                                                                               : "deadlock-opponent";
            out << "status " << status << "\n";
            out << ":: status " << status << "\n";
            return kExitOk;
        }

        if (region->parsed()) {
            GameInstance game = parse(read_file(in_path));
            RegionResult r = certain_region(game, pick_window(window_spec, game));
            dump_region(out, game, r);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace crg
