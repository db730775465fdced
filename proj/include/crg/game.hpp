#ifndef CRG_GAME_HPP
#define CRG_GAME_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace crg {

using Counter = std::int64_t;
using CounterVec = std::vector<Counter>;

enum class Player { Reacher, Opponent };

// Reacher's perspective; Win and Lose are only ever reported when sound.
enum class Verdict : std::uint8_t { Win, Lose, Unknown };

// How a counter that would become negative is treated:
// Z       - counters range over all integers, every edge stays enabled;
// Vass    - an edge is disabled if taking it would make a counter negative;
// NonBlockingVass - every edge stays enabled, negative results clamp to 0.
enum class Semantics { Z, Vass, NonBlockingVass };

struct Location {
    std::string name;
    Player owner = Player::Reacher;
};

struct Edge {
    int src = 0;
    CounterVec label;
    int dst = 0;
};

// The game arena: a finite directed graph with integer-vector edge labels.
// Plain data; immutable by convention once built. Edge order is significant
// and preserved by every operation.
struct CounterSystem {
    int dimension = 1;
    std::vector<Location> locations;
    std::vector<Edge> edges;

    int find_location(const std::string& name) const;  // -1 if absent
};

struct Configuration {
    int location = 0;
    CounterVec counters;

    auto operator<=>(const Configuration&) const = default;
};

struct Objective {
    enum class Kind { SingleConfig, LocationsAtZero, AxisZero };

    Kind kind = Kind::SingleConfig;
    Configuration target;            // SingleConfig only
    std::vector<int> location_set;   // LocationsAtZero / AxisZero, ascending

    static Objective single(Configuration c);
    static Objective locations_at_zero(std::vector<int> locs);
    static Objective axis_zero(std::vector<int> locs);

    bool operator==(const Objective&) const = default;
};

struct GameInstance {
    CounterSystem system;
    Semantics semantics = Semantics::Z;
    Objective objective;
    Configuration initial;
};

// Machine-readable validation finding: a code plus the offending element.
struct Diagnostic {
    std::string code;
    std::string detail;
};

std::vector<Diagnostic> validate(const CounterSystem& system);
std::vector<Diagnostic> validate(const GameInstance& game);

// True iff every label component lies in {-1,0,1}.
bool is_short_range(const CounterSystem& system);

// Indices of the edges the mover may take at `config`, in declaration order.
// Z and NonBlockingVass enable every outgoing edge; Vass drops edges that
// would push a counter below zero.
std::vector<int> enabled_edges(const CounterSystem& system, Semantics semantics,
                               const Configuration& config);

bool edge_enabled(Semantics semantics, const Configuration& config, const Edge& edge);

// Successor configuration. Precondition: the edge is enabled at `config`
// (a disabled Vass edge is a contract error and throws).
Configuration apply_edge(Semantics semantics, const Configuration& config, const Edge& edge);

// A play visits the objective as soon as any of its configurations (the
// initial one included) matches.
bool objective_matches(const Objective& objective, const Configuration& config);

bool valid_name(const std::string& name);

const char* to_string(Player p);
const char* to_string(Semantics s);
const char* to_string(Verdict v);

}  // namespace crg

#endif
