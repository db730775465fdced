#ifndef CRG_TESTS_ORACLE_HPP
#define CRG_TESTS_ORACLE_HPP

#include <vector>

#include "crg/game.hpp"
#include "crg/solver.hpp"

namespace crg::testing {

// Independent ground truth for small windows: bounded-horizon value
// iteration instead of the solver's worklist attractor. W_k(c) = "Reacher
// can force an objective visit within k moves"; on a finite window the
// values stabilize after at most |configs| rounds.
inline std::vector<bool> brute_force_win(const GameInstance& game, const RegionResult& shape,
                                         BoundaryPolicy policy) {
    const std::size_t total = shape.size();
    std::vector<Configuration> cfg(total);
    for (std::size_t c = 0; c < total; ++c) cfg[c] = shape.config_at(c);

    std::vector<bool> win(total, false);
    for (std::size_t round = 0; round <= total; ++round) {
        bool changed = false;
        std::vector<bool> next(total, false);
        for (std::size_t c = 0; c < total; ++c) {
            bool w;
            if (objective_matches(game.objective, cfg[c])) {
                w = true;
            } else {
                const Player mover = game.system.locations[cfg[c].location].owner;
                auto enabled = enabled_edges(game.system, game.semantics, cfg[c]);
                if (enabled.empty()) {
                    w = mover == Player::Opponent;
                } else {
                    bool any = false, all = true;
                    for (int e : enabled) {
                        Configuration succ = apply_edge(game.semantics, cfg[c], game.system.edges[e]);
                        auto idx = shape.index_of(succ);
                        bool sw = idx ? win[*idx] : policy == BoundaryPolicy::Optimistic;
                        any = any || sw;
                        all = all && sw;
                    }
                    w = mover == Player::Reacher ? any : all;
                }
            }
            next[c] = w;
            changed = changed || w != win[c];
        }
        win.swap(next);
        if (!changed) break;
    }
    return win;
}

}  // namespace crg::testing

#endif
