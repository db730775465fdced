#ifndef CRG_FIXPOINT_HPP
#define CRG_FIXPOINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "crg/game.hpp"

namespace crg {

// Per-location threshold in the NB-VASS zero-reachability fixpoint: the set
// of winning counter values at a location is downward closed, so it is
// either empty (Bottom), {0..n} (Finite n), or all of N (Top).
struct Value {
    enum class Kind : std::uint8_t { Bottom, Finite, Top };

    Kind kind = Kind::Bottom;
    Counter n = 0;  // meaningful for Finite only

    static Value bottom() { return {Kind::Bottom, 0}; }
    static Value finite(Counter n) { return {Kind::Finite, n}; }
    static Value top() { return {Kind::Top, 0}; }

    bool operator==(const Value& o) const {
        return kind == o.kind && (kind != Kind::Finite || n == o.n);
    }
    bool operator<(const Value& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        return kind == Kind::Finite && n < o.n;
    }
    bool operator<=(const Value& o) const { return *this == o || *this < o; }
};

std::string to_string(const Value& v);

using ValueTable = std::vector<Value>;  // indexed by location

struct FixpointParams {
    Counter cap = 64;        // Finite values clamp to cap (recorded)
    std::int64_t max_rounds = 4096;
    int escalation = 3;      // cap doublings attempted after saturation

    // cap = x0 + |Q| * (1 + max |label|), max_rounds = |Q| * (cap + 2)
    static FixpointParams defaults(const CounterSystem& system, Counter queried_value);
};

struct FixpointResult {
    enum class Status { ExactFixpoint, EarlyYes, CapSaturated };

    ValueTable table;
    Status status = Status::CapSaturated;
    std::int64_t rounds = 0;  // of the final escalation attempt
    bool clamped = false;     // some value hit the cap during the final attempt
    Counter cap_used = 0;
};

// Best winning threshold at q' reached through an edge labelled v, i.e. the
// largest x with max(x+v,0) <= m. Bottom absorbs; Finite values that would
// go negative collapse to Bottom.
Value transfer(const Value& m, Counter v);

// Kleene iteration of the threshold table from Finite(0) on objective_set:
// Reacher locations take the max over outgoing edges, Opponent locations
// the min (a stuck Opponent location gets Top, a stuck Reacher one keeps
// its value). Jacobi sweeps in declaration order; each round reads the
// previous table. Stops on early success (table value at query.location
// reaches the query value), on an exact fixpoint, or at max_rounds.
// EarlyYes is always sound; ExactFixpoint without clamping is the true
// least fixpoint; CapSaturated decides nothing.
FixpointResult nb_fixpoint(const CounterSystem& system, const std::vector<int>& objective_set,
                           const Configuration& query, const FixpointParams& params);

struct QzResult {
    std::vector<int> members;   // winning with counter 0, ascending
    std::vector<int> unknown;   // saturated even after escalation
    std::int64_t peak_rounds = 0;
};

// Locations from which Reacher wins zero-reachability towards q_f with
// initial counter value 0. Saturated locations are reported separately,
// never silently classified.
QzResult compute_qz(const CounterSystem& system, int q_f, const FixpointParams& params);
QzResult compute_qz(const CounterSystem& system, int q_f);

// The VASS restricted to Q_Z, every exit rerouted to a one-way bot location
// that keeps the counter positive; objective: reach counter 0 anywhere.
GameInstance build_qz_vass(const CounterSystem& system, const std::vector<int>& qz);

struct Decision {
    Verdict verdict = Verdict::Unknown;
    QzResult qz;
    FixpointResult final_stage;
    std::int64_t peak_rounds = 0;  // max rounds over every fixpoint run
    std::string explain;
};

// Decides NB-VASS zero-reachability: compute Q_Z, then ask the fixpoint
// whether Reacher can force a zero at a Q_Z location from the initial
// configuration. Win and Lose answers are sound; saturation (or unknown
// Q_Z membership on a Lose path) yields Unknown.
Decision decide_nbvass_zero(const GameInstance& game, const FixpointParams& params);
Decision decide_nbvass_zero(const GameInstance& game);

// One line per location: "value <loc> bottom|<n>|top".
std::string format_value_table(const CounterSystem& system, const ValueTable& table);

}  // namespace crg

#endif
