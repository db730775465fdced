#include "crg/harness.hpp"

#include <algorithm>
#include <sstream>

#include "crg/random.hpp"

namespace crg {

const char* to_string(ReductionName name) {
    switch (name) {
        case ReductionName::Normalize: return "normalize";
        case ReductionName::Shift: return "shift";
        case ReductionName::Split: return "split";
        case ReductionName::VassToZ: return "vass-to-z";
        case ReductionName::AxisZeroToSingle: return "axis-to-single";
        case ReductionName::ZToVass: return "z-to-vass";
        case ReductionName::Nb1ToVass0: return "nb1-to-vass0";
        case ReductionName::Vass0ToNb1: return "vass0-to-nb1";
    }
    return "?";
}

std::optional<ReductionName> reduction_from_string(const std::string& name) {
    for (ReductionName r : all_reductions())
        if (name == to_string(r)) return r;
    return std::nullopt;
}

std::vector<ReductionName> all_reductions() {
    return {ReductionName::Normalize, ReductionName::Shift,       ReductionName::Split,
            ReductionName::VassToZ,   ReductionName::AxisZeroToSingle, ReductionName::ZToVass,
            ReductionName::Nb1ToVass0, ReductionName::Vass0ToNb1};
}

GenParams conform_params(ReductionName name, GenParams p) {
    switch (name) {
        case ReductionName::Normalize:
            p.objective_kind = Objective::Kind::SingleConfig;
            break;
        case ReductionName::Shift:
            p.semantics = Semantics::Z;
            p.objective_kind = Objective::Kind::SingleConfig;
            break;
        case ReductionName::Split:
            p.objective_kind = Objective::Kind::SingleConfig;
            if (p.label_bound < 2) p.label_bound = 3;  // otherwise nothing splits
            break;
        case ReductionName::VassToZ:
            p.semantics = Semantics::Vass;
            p.objective_kind = Objective::Kind::SingleConfig;
            p.force_reacher_objective = true;
            break;
        case ReductionName::AxisZeroToSingle:
            p.semantics = Semantics::Vass;
            p.dimension = 2;
            p.objective_kind = Objective::Kind::AxisZero;
            p.force_reacher_objective = true;
            break;
        case ReductionName::ZToVass:
            p.semantics = Semantics::Z;
            p.dimension = 1;
            p.label_bound = std::min<Counter>(p.label_bound, 1);
            p.objective_kind = Objective::Kind::SingleConfig;
            p.objective_bound = 0;
            p.force_reacher_objective = true;
            break;
        case ReductionName::Nb1ToVass0:
            p.semantics = Semantics::NonBlockingVass;
            p.dimension = 1;
            p.label_bound = std::min<Counter>(p.label_bound, 1);
            p.objective_kind = Objective::Kind::SingleConfig;
            p.force_reacher_objective = true;
            break;
        case ReductionName::Vass0ToNb1:
            p.semantics = Semantics::Vass;
            p.dimension = 1;
            p.objective_kind = Objective::Kind::SingleConfig;
            p.objective_bound = 0;
            p.force_reacher_objective = true;
            break;
    }
    if (p.label_bound < 1) p.label_bound = 1;
    return p;
}

GameInstance conform_instance(ReductionName name, GameInstance game) {
    if (name == ReductionName::Nb1ToVass0) game.objective.target.counters = {1};
    return game;
}

ReductionOutput apply_reduction(ReductionName name, const GameInstance& game, GadgetVariant variant) {
    switch (name) {
        case ReductionName::Normalize: return normalize_reacher_objective(game);
        case ReductionName::Shift: return shift_objective_to_zero(game);
        case ReductionName::Split: return split_to_short_range(game);
        case ReductionName::VassToZ: return vass_to_z(game, variant);
        case ReductionName::AxisZeroToSingle: return axis_zero_to_single(game);
        case ReductionName::ZToVass: return z_to_vass(game);
        case ReductionName::Nb1ToVass0: return nbvass_one_to_vass_zero(game, variant);
        case ReductionName::Vass0ToNb1: return vass_zero_to_nbvass_one(game);
    }
    throw std::invalid_argument("unknown reduction");
}

Window default_source_window(ReductionName name, const GameInstance& game) {
    const int d = game.system.dimension;
    Window w;
    if (game.semantics == Semantics::Z)
        w = Window::uniform(d, d == 1 ? -8 : -6, d == 1 ? 8 : 6);
    else
        w = Window::uniform(d, 0, d == 1 ? 12 : 6);
    (void)name;
    for (int i = 0; i < d; ++i) {
        w.bounds[i].first = std::min(w.bounds[i].first, game.initial.counters[i]);
        w.bounds[i].second = std::max(w.bounds[i].second, game.initial.counters[i]);
        if (game.objective.kind == Objective::Kind::SingleConfig) {
            w.bounds[i].first = std::min(w.bounds[i].first, game.objective.target.counters[i]);
            w.bounds[i].second = std::max(w.bounds[i].second, game.objective.target.counters[i]);
        }
    }
    return w;
}

Window derive_target_window(const GameInstance& target, const Window& source_window) {
    const int d = target.system.dimension;

    Counter span = 0;
    for (auto [lo, hi] : source_window.bounds) span = std::max({span, hi, lo < 0 ? -lo : lo});

    Counter slack = 2;
    for (const Edge& e : target.system.edges)
        for (Counter c : e.label) slack = std::max(slack, 2 + (c < 0 ? -c : c));
    if (target.objective.kind == Objective::Kind::SingleConfig)
        for (Counter c : target.objective.target.counters) slack += c < 0 ? -c : c;

    Window w = target.semantics == Semantics::Z ? Window::uniform(d, -(span + slack), span + slack)
                                                : Window::uniform(d, 0, span + slack);
    for (int i = 0; i < d; ++i) {
        w.bounds[i].first = std::min(w.bounds[i].first, target.initial.counters[i]);
        w.bounds[i].second = std::max(w.bounds[i].second, target.initial.counters[i]);
        if (target.objective.kind == Objective::Kind::SingleConfig) {
            w.bounds[i].first = std::min(w.bounds[i].first, target.objective.target.counters[i]);
            w.bounds[i].second = std::max(w.bounds[i].second, target.objective.target.counters[i]);
        }
    }
    return w;
}

VerificationReport verify_reduction(ReductionName name, const VerifyOptions& options) {
    VerificationReport report;
    report.reduction = to_string(name);
    report.trials = options.trials;

    const GenParams params = conform_params(name, options.gen);
    bool vass_involved = false;

    for (int trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t seed = mix_seed(options.seed, static_cast<std::uint64_t>(trial));
        GameInstance source = conform_instance(name, generate(params, seed));
        ReductionOutput reduced = apply_reduction(name, source, options.variant);

        TrialRecord rec;
        rec.seed = seed;
        rec.source_locations = static_cast<int>(source.system.locations.size());
        rec.source_edges = static_cast<int>(source.system.edges.size());
        rec.target_locations = static_cast<int>(reduced.game.system.locations.size());
        rec.target_edges = static_cast<int>(reduced.game.system.edges.size());
        rec.target_short_range = is_short_range(reduced.game.system);
        rec.target_valid = validate(reduced.game).empty();
        if (source.semantics == Semantics::Vass || reduced.game.semantics == Semantics::Vass)
            vass_involved = true;

        Window source_window = options.source_window ? *options.source_window
                                                     : default_source_window(name, source);
        // the mapped initial must stay solvable even when options pin the source window
        Window target_window = derive_target_window(reduced.game, source_window);
        rec.source_window = to_string(source_window);
        rec.target_window = to_string(target_window);

        RegionResult source_region = certain_region(source, source_window);
        RegionResult target_region = certain_region(reduced.game, target_window);
        rec.source_verdict = source_region.at(source.initial);
        rec.target_verdict = target_region.at(reduced.game.initial);

        if (!rec.target_valid) {
            rec.agree = false;
        } else if (rec.source_verdict == Verdict::Unknown || rec.target_verdict == Verdict::Unknown) {
            rec.skipped = true;
        } else {
            rec.agree = rec.source_verdict == rec.target_verdict;
        }

        if (rec.skipped) {
            ++report.skipped_unknown;
        } else if (rec.agree) {
            ++report.agreements;
        } else {
            ++report.disagreements;
            std::ostringstream dump;
            dump << "trial " << trial << " seed " << seed << " source=" << to_string(rec.source_verdict)
                 << " target=" << to_string(rec.target_verdict)
                 << (rec.target_valid ? "" : " (target failed validation)") << "\n";
            dump << "--- source ---\n" << serialize(source);
            dump << "--- target ---\n" << serialize(reduced.game);
            report.failures.push_back(dump.str());
        }
        report.records.push_back(rec);
    }

    for (const std::string& n : apply_reduction(name, conform_instance(name, generate(params, mix_seed(options.seed, 0))),
                                                options.variant)
                                    .notes)
        report.notes.push_back(n);
    if (vass_involved)
        report.notes.push_back("vass deadlock convention: a player with no enabled edge loses");
    return report;
}

std::string render_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "# verify " << report.reduction << ": trials=" << report.trials
        << " agreements=" << report.agreements << " disagreements=" << report.disagreements
        << " skipped=" << report.skipped_unknown << "\n";
    for (const std::string& n : report.notes) out << "# note: " << n << "\n";
    out << ":: verify name=" << report.reduction << " trials=" << report.trials
        << " agreements=" << report.agreements << " disagreements=" << report.disagreements
        << " skipped=" << report.skipped_unknown << "\n";
    for (size_t i = 0; i < report.records.size(); ++i) {
        const TrialRecord& r = report.records[i];
        out << ":: trial idx=" << i << " seed=" << r.seed << " source=" << to_string(r.source_verdict)
            << " target=" << to_string(r.target_verdict) << " outcome="
            << (r.skipped ? "skipped" : r.agree ? "agree" : "disagree") << " locs=" << r.source_locations
            << "->" << r.target_locations << " edges=" << r.source_edges << "->" << r.target_edges
            << " short-range=" << (r.target_short_range ? "yes" : "no") << " windows=" << r.source_window
            << "|" << r.target_window << "\n";
    }
    for (const std::string& f : report.failures) {
        out << "# FAILURE\n";
        std::istringstream lines(f);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << "\n";
    }
    return out.str();
}

}  // namespace crg
