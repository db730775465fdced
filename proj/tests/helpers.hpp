#ifndef CRG_TESTS_HELPERS_HPP
#define CRG_TESTS_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "crg/game.hpp"

namespace crg::testing {

// Compact builder for handwritten instances.
struct Builder {
    GameInstance game;

    explicit Builder(int dimension, Semantics sem = Semantics::Z) {
        game.system.dimension = dimension;
        game.semantics = sem;
    }

    Builder& loc(const std::string& name, Player owner) {
        game.system.locations.push_back({name, owner});
        return *this;
    }

    Builder& edge(const std::string& src, const std::string& dst, std::initializer_list<Counter> label) {
        Edge e;
        e.src = game.system.find_location(src);
        e.dst = game.system.find_location(dst);
        e.label = CounterVec(label);
        game.system.edges.push_back(std::move(e));
        return *this;
    }

    Builder& init(const std::string& loc, std::initializer_list<Counter> counters) {
        game.initial = {game.system.find_location(loc), CounterVec(counters)};
        return *this;
    }

    Builder& objective_single(const std::string& loc, std::initializer_list<Counter> counters) {
        game.objective = Objective::single({game.system.find_location(loc), CounterVec(counters)});
        return *this;
    }

    Builder& objective_zeroset(std::initializer_list<const char*> locs) {
        std::vector<int> idx;
        for (const char* l : locs) idx.push_back(game.system.find_location(l));
        game.objective = Objective::locations_at_zero(std::move(idx));
        return *this;
    }

    Builder& objective_axiszero(std::initializer_list<const char*> locs) {
        std::vector<int> idx;
        for (const char* l : locs) idx.push_back(game.system.find_location(l));
        game.objective = Objective::axis_zero(std::move(idx));
        return *this;
    }
};

inline Configuration cfg(int loc, std::initializer_list<Counter> counters) {
    return {loc, CounterVec(counters)};
}

}  // namespace crg::testing

#endif
