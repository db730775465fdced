#include "crg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace crg {

int CounterSystem::find_location(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(locations.size()); ++i)
        if (locations[i].name == name) return i;
    return -1;
}

Objective Objective::single(Configuration c) {
    Objective o;
    o.kind = Kind::SingleConfig;
    o.target = std::move(c);
    return o;
}

Objective Objective::locations_at_zero(std::vector<int> locs) {
    Objective o;
    o.kind = Kind::LocationsAtZero;
    std::sort(locs.begin(), locs.end());
    locs.erase(std::unique(locs.begin(), locs.end()), locs.end());
    o.location_set = std::move(locs);
    return o;
}

Objective Objective::axis_zero(std::vector<int> locs) {
    Objective o = locations_at_zero(std::move(locs));
    o.kind = Kind::AxisZero;
    return o;
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '+' || c == '-';
        if (!ok) return false;
    }
    return true;
}

std::vector<Diagnostic> validate(const CounterSystem& system) {
    std::vector<Diagnostic> out;
    const int n = static_cast<int>(system.locations.size());

    if (system.dimension < 1)
        out.push_back({"bad-dimension", "dimension must be >= 1, got " + std::to_string(system.dimension)});

    std::unordered_set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        const auto& loc = system.locations[i];
        if (!valid_name(loc.name))
            out.push_back({"bad-location-name", "location " + std::to_string(i) + ": '" + loc.name + "'"});
        if (!seen.insert(loc.name).second)
            out.push_back({"dup-location-name", "location name '" + loc.name + "' repeated"});
    }

    for (size_t i = 0; i < system.edges.size(); ++i) {
        const Edge& e = system.edges[i];
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            out.push_back({"bad-edge-endpoint", "edge " + std::to_string(i) + " references location " +
                                                    std::to_string(e.src < 0 || e.src >= n ? e.src : e.dst)});
        if (static_cast<int>(e.label.size()) != system.dimension)
            out.push_back({"bad-label-arity", "edge " + std::to_string(i) + " label has " +
                                                  std::to_string(e.label.size()) + " components, expected " +
                                                  std::to_string(system.dimension)});
    }
    return out;
}

namespace {

bool nonnegative(const CounterVec& v) {
    return std::all_of(v.begin(), v.end(), [](Counter c) { return c >= 0; });
}

void check_config(std::vector<Diagnostic>& out, const CounterSystem& sys, Semantics sem,
                  const Configuration& c, const char* what, const char* arity_code,
                  const char* loc_code, const char* neg_code) {
    if (c.location < 0 || c.location >= static_cast<int>(sys.locations.size()))
        out.push_back({loc_code, std::string(what) + " references location index " + std::to_string(c.location)});
    if (static_cast<int>(c.counters.size()) != sys.dimension)
        out.push_back({arity_code, std::string(what) + " vector has " + std::to_string(c.counters.size()) +
                                       " components, expected " + std::to_string(sys.dimension)});
    if (sem != Semantics::Z && !nonnegative(c.counters))
        out.push_back({neg_code, std::string(what) + " counters must be nonnegative under this semantics"});
}

}  // namespace

std::vector<Diagnostic> validate(const GameInstance& game) {
    std::vector<Diagnostic> out = validate(game.system);
    const int n = static_cast<int>(game.system.locations.size());

    check_config(out, game.system, game.semantics, game.initial, "init", "bad-initial-arity",
                 "bad-initial-location", "negative-initial");

    const Objective& obj = game.objective;
    switch (obj.kind) {
        case Objective::Kind::SingleConfig:
            check_config(out, game.system, game.semantics, obj.target, "objective", "bad-objective-arity",
                         "bad-objective-location", "negative-objective");
            break;
        case Objective::Kind::LocationsAtZero:
        case Objective::Kind::AxisZero:
            if (obj.location_set.empty())
                out.push_back({"empty-zeroset", "objective location set is empty"});
            for (int q : obj.location_set)
                if (q < 0 || q >= n)
                    out.push_back({"bad-objective-location", "objective references location index " + std::to_string(q)});
            if (obj.kind == Objective::Kind::AxisZero && game.system.dimension != 2)
                out.push_back({"axiszero-dimension", "axiszero objective requires dimension 2"});
            break;
    }
    return out;
}

bool is_short_range(const CounterSystem& system) {
    for (const Edge& e : system.edges)
        for (Counter c : e.label)
            if (c < -1 || c > 1) return false;
    return true;
}

bool edge_enabled(Semantics semantics, const Configuration& config, const Edge& edge) {
    if (semantics != Semantics::Vass) return true;
    for (size_t i = 0; i < edge.label.size(); ++i)
        if (config.counters[i] + edge.label[i] < 0) return false;
    return true;
}

std::vector<int> enabled_edges(const CounterSystem& system, Semantics semantics,
                               const Configuration& config) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(system.edges.size()); ++i) {
        const Edge& e = system.edges[i];
        if (e.src != config.location) continue;
        if (edge_enabled(semantics, config, e)) out.push_back(i);
    }
    return out;
}

Configuration apply_edge(Semantics semantics, const Configuration& config, const Edge& edge) {
    if (!edge_enabled(semantics, config, edge))
        throw std::logic_error("apply_edge: edge disabled under Vass semantics");
    Configuration next;
    next.location = edge.dst;
    next.counters.resize(config.counters.size());
    for (size_t i = 0; i < config.counters.size(); ++i) {
        Counter v = config.counters[i] + edge.label[i];
        if (semantics == Semantics::NonBlockingVass && v < 0) v = 0;
        next.counters[i] = v;
    }
    return next;
}

bool objective_matches(const Objective& objective, const Configuration& config) {
    switch (objective.kind) {
        case Objective::Kind::SingleConfig:
            return config == objective.target;
        case Objective::Kind::LocationsAtZero: {
            if (!std::binary_search(objective.location_set.begin(), objective.location_set.end(),
                                    config.location))
                return false;
            return std::all_of(config.counters.begin(), config.counters.end(),
                               [](Counter c) { return c == 0; });
        }
        case Objective::Kind::AxisZero: {
            if (!std::binary_search(objective.location_set.begin(), objective.location_set.end(),
                                    config.location))
                return false;
            if (config.counters.size() != 2) return false;
            Counter x1 = config.counters[0], x2 = config.counters[1];
            return (x1 == 0 && x2 >= 0) || (x2 == 0 && x1 >= 0);
        }
    }
    return false;
}

const char* to_string(Player p) { return p == Player::Reacher ? "reacher" : "opponent"; }

const char* to_string(Semantics s) {
    switch (s) {
        case Semantics::Z: return "z";
        case Semantics::Vass: return "vass";
        case Semantics::NonBlockingVass: return "nbvass";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Win: return "win";
        case Verdict::Lose: return "lose";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace crg
