#ifndef CRG_REDUCTIONS_HPP
#define CRG_REDUCTIONS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "crg/game.hpp"

namespace crg {

// Two constructions are printed inconsistently between the edge lists and
// the figures; both readings are implemented. Figure is the default and the
// one that preserves winners.
enum class GadgetVariant { Figure, Align };

// A transformed instance plus the bookkeeping needed to relate it back to
// its source: a total configuration mapping, the generated names of every
// gadget location keyed by role (e.g. "test:3", "check:1", "bot"), and
// human-readable notes about applied deviations.
struct ReductionOutput {
    GameInstance game;
    std::function<Configuration(const Configuration&)> config_map;
    std::map<std::string, std::string> fresh_names;
    std::vector<std::string> notes;
};

// If the objective location is Opponent-owned, interpose a fresh Reacher
// location in front of it (incoming edges are redirected there) and make
// that the objective. Winner-preserving under all three semantics.
// Precondition: SingleConfig objective.
ReductionOutput normalize_reacher_objective(const GameInstance& game);

// Z semantics only: translate counters so the objective value becomes zero.
ReductionOutput shift_objective_to_zero(const GameInstance& game);

// Split every edge with a label component outside {-1,0,1} into a chain of
// unit steps through fresh choice-free locations owned by the edge's source
// owner. Output satisfies is_short_range.
ReductionOutput split_to_short_range(const GameInstance& game);

// VASS -> Z: simulate edge deactivation in the winning condition. A player
// who drives a counter negative hands the adversary a winning detour
// through the check locations. Preconditions: Vass semantics, SingleConfig
// objective at a Reacher location. The Figure variant increments the tested
// coordinate on entry to check_i; Align keeps the zero label.
ReductionOutput vass_to_z(const GameInstance& game, GadgetVariant variant = GadgetVariant::Figure);

// d=2 VASS, axis-zero objective set -> single objective (bot,(0,0)): from a
// set location, Reacher may drain the remaining counter in a reset location
// and exit. Precondition: every objective location Reacher-owned.
ReductionOutput axis_zero_to_single(const GameInstance& game);

// Short-range Z with objective (q_f,0) -> VASS with objective (bot,0): a
// plus and a minus copy track |counter|; crossings between copies pass
// through adversary-owned checkpoints that punish crossing at nonzero.
ReductionOutput z_to_vass(const GameInstance& game);

// Short-range NB-VASS with objective (q_f,1) -> VASS with objective (bot,0):
// at every decrement Opponent must declare zero-or-positive and Reacher can
// call the bluff. The Align variant's punishment edge goes straight to bot
// and is wrong for counter values >= 2 (kept for the harness to exhibit).
ReductionOutput nbvass_one_to_vass_zero(const GameInstance& game,
                                        GadgetVariant variant = GadgetVariant::Figure);

// VASS with objective (q_f,0), arbitrary labels -> NB-VASS with objective
// (bot,1): each negative edge detours through an adversary checkpoint whose
// punishment edge pays off exactly when the move would have been disabled.
ReductionOutput vass_zero_to_nbvass_one(const GameInstance& game);

// Applies output.config_map; total on source configurations.
Configuration map_config(const ReductionOutput& output, const Configuration& config);

}  // namespace crg

#endif
