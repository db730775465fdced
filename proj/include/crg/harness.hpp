#ifndef CRG_HARNESS_HPP
#define CRG_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crg/io.hpp"
#include "crg/reductions.hpp"
#include "crg/solver.hpp"

namespace crg {

enum class ReductionName {
    Normalize,
    Shift,
    Split,
    VassToZ,
    AxisZeroToSingle,
    ZToVass,
    Nb1ToVass0,
    Vass0ToNb1,
};

const char* to_string(ReductionName name);
std::optional<ReductionName> reduction_from_string(const std::string& name);
std::vector<ReductionName> all_reductions();

struct TrialRecord {
    std::uint64_t seed = 0;
    Verdict source_verdict = Verdict::Unknown;
    Verdict target_verdict = Verdict::Unknown;
    bool agree = false;    // both certain, equal
    bool skipped = false;  // either side Unknown
    int source_locations = 0, source_edges = 0;
    int target_locations = 0, target_edges = 0;
    bool target_short_range = false;
    bool target_valid = false;
    std::string source_window, target_window;
};

// One seeded equivalence run: generate conforming sources, transform,
// solve both sides with the bounded oracle, compare certain verdicts at the
// (mapped) initial configurations. trials = agreements + disagreements +
// skipped_unknown; any disagreement is fatal and carries both instances.
struct VerificationReport {
    std::string reduction;
    int trials = 0;
    int agreements = 0;
    int disagreements = 0;
    int skipped_unknown = 0;
    std::vector<TrialRecord> records;
    std::vector<std::string> notes;
    std::vector<std::string> failures;  // serialized source+target per disagreement
};

struct VerifyOptions {
    GenParams gen;  // base shape; semantics/objective are conformed per reduction
    int trials = 100;
    std::uint64_t seed = 1;
    GadgetVariant variant = GadgetVariant::Figure;
    std::optional<Window> source_window;  // derived from the instance if absent
};

// Adjusts params/instance to the reduction's precondition class (semantics,
// dimension, objective shape and ownership); exposed for tests.
GenParams conform_params(ReductionName name, GenParams params);
GameInstance conform_instance(ReductionName name, GameInstance game);

// Applies the named reduction with the given variant where it applies.
ReductionOutput apply_reduction(ReductionName name, const GameInstance& game, GadgetVariant variant);

Window default_source_window(ReductionName name, const GameInstance& game);
Window derive_target_window(const GameInstance& target, const Window& source_window);

VerificationReport verify_reduction(ReductionName name, const VerifyOptions& options);

// '#'-commented human text plus "::" machine lines; byte-deterministic.
std::string render_report(const VerificationReport& report);

}  // namespace crg

#endif
