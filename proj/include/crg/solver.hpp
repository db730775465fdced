#ifndef CRG_SOLVER_HPP
#define CRG_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "crg/game.hpp"

namespace crg {

// Per-dimension inclusive counter bounds. The oracle enumerates exactly the
// configurations whose counters lie inside; everything else is handled by a
// BoundaryPolicy.
struct Window {
    std::vector<std::pair<Counter, Counter>> bounds;  // (lo, hi) per dimension

    static Window uniform(int dimension, Counter lo, Counter hi);
    // d=1 -> [-16,16] (Z) or [0,32]; d=2 -> [0,12]^2 (Z gets [-12,12]^2);
    // always widened to contain the initial and objective vectors.
    static Window default_for(const GameInstance& game);

    bool contains(const CounterVec& v) const;
    Counter cells() const;  // number of counter vectors inside
};

std::string to_string(const Window& w);  // "lo:hi[,lo:hi]"

// Classification of successors that step outside the window.
// Pessimistic: they never reach the objective (under-approximates Reacher);
// Optimistic:  they count as already winning (over-approximates Reacher).
enum class BoundaryPolicy { Pessimistic, Optimistic };

// Three-valued classification of every in-window configuration, from
// Reacher's perspective. `rank` holds pessimistic attractor ranks for Win
// configurations (no_rank elsewhere); single-policy results from
// solve_bounded never contain Unknown.
struct RegionResult {
    static constexpr std::uint32_t no_rank = 0xffffffffu;

    Window window;
    int num_locations = 0;
    std::vector<Verdict> verdicts;    // indexed by config_index
    std::vector<std::uint32_t> rank;

    std::optional<std::size_t> index_of(const Configuration& c) const;
    Configuration config_at(std::size_t index) const;
    Verdict at(const Configuration& c) const;  // throws if out of window
    std::size_t size() const { return verdicts.size(); }
};

// Per-configuration move choice for one player. Partial: configurations
// outside the map fall back to random play in simulate().
struct PositionalStrategy {
    Player player = Player::Reacher;
    std::map<Configuration, int> moves;  // config -> edge index
};

struct Play {
    enum class Status { ReachedObjective, Deadlock, StepLimit };

    std::vector<Configuration> configs;
    Status status = Status::StepLimit;
    Player deadlock_loser = Player::Reacher;  // meaningful when status == Deadlock
};

bool reacher_wins(const Play& play);

// Backward attractor of the objective within the window, under one boundary
// policy. A Reacher configuration wins iff some enabled move wins; an
// Opponent configuration wins iff it has at least one enabled move and all
// of them win; a stuck Opponent loses the play, a stuck Reacher too.
// Objective configurations win outright.
RegionResult solve_bounded(const GameInstance& game, const Window& window, BoundaryPolicy policy);

// Win where the pessimistic attractor wins, Lose where the optimistic one
// loses, Unknown elsewhere. Certain verdicts are sound for the unbounded
// game regardless of the window.
RegionResult certain_region(const GameInstance& game, const Window& window);

// Reacher: defined on every certain-Win non-objective Reacher configuration,
// picking the lowest-index enabled edge into a certain-Win successor of
// strictly smaller rank. Opponent: defined on certain-Lose Opponent
// configurations, picking the lowest-index enabled edge into a certain-Lose
// successor.
PositionalStrategy extract_strategy(const GameInstance& game, const RegionResult& region, Player player);

// Steps the game from `start`, each mover following its strategy where
// defined and a seeded uniform choice among enabled edges otherwise. Stops
// on objective visit (initial configuration included), deadlock, or after
// max_steps moves.
Play simulate(const GameInstance& game, const PositionalStrategy* reacher,
              const PositionalStrategy* opponent, const Configuration& start, int max_steps,
              std::uint64_t seed);

struct DownwardViolation {
    Configuration win;   // certain-Win
    Configuration lose;  // certain-Lose with smaller counter, same location
};

// For NB-VASS d=1 zero-objective games the winning set is downward closed
// per location; returns every certain-verdict pair violating that.
std::vector<DownwardViolation> check_downward_closure(const GameInstance& game,
                                                      const RegionResult& region);

}  // namespace crg

#endif
