#include "crg/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "crg/random.hpp"

namespace crg {

Window Window::uniform(int dimension, Counter lo, Counter hi) {
    Window w;
    w.bounds.assign(static_cast<size_t>(dimension), {lo, hi});
    return w;
}

Window Window::default_for(const GameInstance& game) {
    const int d = game.system.dimension;
    const bool z = game.semantics == Semantics::Z;
    Window w;
    if (d == 1)
        w = z ? uniform(1, -16, 16) : uniform(1, 0, 32);
    else if (d == 2)
        w = z ? uniform(2, -12, 12) : uniform(2, 0, 12);
    else
        w = z ? uniform(d, -6, 6) : uniform(d, 0, 6);

    auto widen = [&](const CounterVec& v) {
        for (int i = 0; i < d && i < static_cast<int>(v.size()); ++i) {
            w.bounds[i].first = std::min(w.bounds[i].first, v[i]);
            w.bounds[i].second = std::max(w.bounds[i].second, v[i]);
        }
    };
    widen(game.initial.counters);
    if (game.objective.kind == Objective::Kind::SingleConfig) widen(game.objective.target.counters);
    return w;
}

bool Window::contains(const CounterVec& v) const {
    if (v.size() != bounds.size()) return false;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < bounds[i].first || v[i] > bounds[i].second) return false;
    return true;
}

Counter Window::cells() const {
    Counter total = 1;
    for (auto [lo, hi] : bounds) total *= hi - lo + 1;
    return total;
}

std::string to_string(const Window& w) {
    std::string out;
    for (size_t i = 0; i < w.bounds.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.bounds[i].first) + ":" + std::to_string(w.bounds[i].second);
    }
    return out;
}

std::optional<std::size_t> RegionResult::index_of(const Configuration& c) const {
    if (c.location < 0 || c.location >= num_locations) return std::nullopt;
    if (!window.contains(c.counters)) return std::nullopt;
    std::size_t off = 0;
    for (size_t i = 0; i < c.counters.size(); ++i) {
        auto [lo, hi] = window.bounds[i];
        off = off * static_cast<std::size_t>(hi - lo + 1) + static_cast<std::size_t>(c.counters[i] - lo);
    }
    return static_cast<std::size_t>(c.location) * static_cast<std::size_t>(window.cells()) + off;
}

Configuration RegionResult::config_at(std::size_t index) const {
    const std::size_t cells = static_cast<std::size_t>(window.cells());
    Configuration c;
    c.location = static_cast<int>(index / cells);
    std::size_t off = index % cells;
    const int d = static_cast<int>(window.bounds.size());
    c.counters.assign(static_cast<size_t>(d), 0);
    for (int i = d - 1; i >= 0; --i) {
        auto [lo, hi] = window.bounds[i];
        std::size_t width = static_cast<std::size_t>(hi - lo + 1);
        c.counters[static_cast<size_t>(i)] = lo + static_cast<Counter>(off % width);
        off /= width;
    }
    return c;
}

Verdict RegionResult::at(const Configuration& c) const {
    auto idx = index_of(c);
    if (!idx) throw std::invalid_argument("RegionResult::at: configuration outside window");
    return verdicts[*idx];
}

bool reacher_wins(const Play& play) {
    if (play.status == Play::Status::ReachedObjective) return true;
    return play.status == Play::Status::Deadlock && play.deadlock_loser == Player::Opponent;
}

namespace {

constexpr std::size_t kMaxConfigs = std::size_t{1} << 23;
constexpr int kBoundary = -1;

Window checked_window(const GameInstance& game, Window window) {
    const int d = game.system.dimension;
    const int n = static_cast<int>(game.system.locations.size());
    if (n == 0) throw std::invalid_argument("system has no locations");
    if (!validate(game).empty()) throw std::invalid_argument("instance invalid");
    if (game.initial.location < 0 || game.initial.location >= n)
        throw std::invalid_argument("initial location out of range");
    if (static_cast<int>(window.bounds.size()) != d)
        throw std::invalid_argument("window dimension mismatch");
    for (auto& [lo, hi] : window.bounds) {
        if (game.semantics != Semantics::Z) lo = 0;  // counters cannot go negative
        if (lo > hi) throw std::invalid_argument("window has lo > hi");
        if (lo < -(Counter{1} << 40) || hi > (Counter{1} << 40))
            throw std::invalid_argument("window bounds out of range");
    }
    if (!window.contains(game.initial.counters))
        throw std::invalid_argument("window too small: initial configuration outside");
    if (game.objective.kind == Objective::Kind::SingleConfig) {
        if (!window.contains(game.objective.target.counters))
            throw std::invalid_argument("window too small: objective configuration outside");
    } else {
        if (!window.contains(CounterVec(static_cast<size_t>(d), 0)))
            throw std::invalid_argument("window too small: zero vector outside");
    }
    return window;
}

}  // namespace

RegionResult solve_bounded(const GameInstance& game, const Window& window_in, BoundaryPolicy policy) {
    const CounterSystem& sys = game.system;
    RegionResult region;
    region.window = checked_window(game, window_in);
    region.num_locations = static_cast<int>(sys.locations.size());

    std::size_t total = static_cast<std::size_t>(region.num_locations);
    for (auto [lo, hi] : region.window.bounds) {
        total *= static_cast<std::size_t>(hi - lo + 1);
        if (total > kMaxConfigs) throw std::invalid_argument("window too large to enumerate");
    }

    region.verdicts.assign(total, Verdict::Lose);
    region.rank.assign(total, RegionResult::no_rank);

    // per-location outgoing edge lists, declaration order
    std::vector<std::vector<int>> out(sys.locations.size());
    for (int e = 0; e < static_cast<int>(sys.edges.size()); ++e) out[static_cast<size_t>(sys.edges[e].src)].push_back(e);

    // forward successors (kBoundary for out-of-window), then reversed
    std::vector<std::size_t> fwd_off(total + 1, 0);
    std::vector<int> fwd_succ;     // config index or kBoundary
    std::vector<std::size_t> rev_off(total + 1, 0);

    std::vector<Configuration> cfg(total);
    for (std::size_t c = 0; c < total; ++c) cfg[c] = region.config_at(c);

    for (std::size_t c = 0; c < total; ++c) {
        fwd_off[c] = fwd_succ.size();
        for (int e : out[static_cast<size_t>(cfg[c].location)]) {
            if (!edge_enabled(game.semantics, cfg[c], sys.edges[static_cast<size_t>(e)])) continue;
            Configuration next = apply_edge(game.semantics, cfg[c], sys.edges[static_cast<size_t>(e)]);
            auto idx = region.index_of(next);
            fwd_succ.push_back(idx ? static_cast<int>(*idx) : kBoundary);
            if (idx) ++rev_off[*idx + 1];
        }
    }
    fwd_off[total] = fwd_succ.size();

    for (std::size_t c = 0; c < total; ++c) rev_off[c + 1] += rev_off[c];
    std::vector<std::size_t> rev_pred(fwd_succ.size());
    {
        std::vector<std::size_t> cursor(rev_off.begin(), rev_off.end() - 1);
        for (std::size_t c = 0; c < total; ++c)
            for (std::size_t k = fwd_off[c]; k < fwd_off[c + 1]; ++k)
                if (fwd_succ[k] != kBoundary) rev_pred[cursor[static_cast<size_t>(fwd_succ[k])]++] = c;
    }

    std::vector<char> win(total, 0);
    std::vector<std::uint32_t> pending(total, 0);
    std::deque<std::size_t> queue;

    auto mark = [&](std::size_t c, std::uint32_t r) {
        win[c] = 1;
        region.rank[c] = r;
        queue.push_back(c);
    };

    // rank-0 seeds: objective configurations and stuck-Opponent configurations
    for (std::size_t c = 0; c < total; ++c) {
        const std::size_t degree = fwd_off[c + 1] - fwd_off[c];
        const Player owner = sys.locations[static_cast<size_t>(cfg[c].location)].owner;
        if (owner == Player::Opponent) {
            if (policy == BoundaryPolicy::Optimistic) {
                std::uint32_t in_window = 0;
                for (std::size_t k = fwd_off[c]; k < fwd_off[c + 1]; ++k)
                    if (fwd_succ[k] != kBoundary) ++in_window;
                pending[c] = in_window;
            } else {
                pending[c] = static_cast<std::uint32_t>(degree);
            }
        }
        if (objective_matches(game.objective, cfg[c])) {
            mark(c, 0);
        } else if (owner == Player::Opponent && degree == 0) {
            mark(c, 0);  // deadlocked Opponent loses the play
        }
    }

    // rank-1 seeds via the boundary, Optimistic only
    if (policy == BoundaryPolicy::Optimistic) {
        for (std::size_t c = 0; c < total; ++c) {
            if (win[c]) continue;
            const std::size_t degree = fwd_off[c + 1] - fwd_off[c];
            if (degree == 0) continue;
            const Player owner = sys.locations[static_cast<size_t>(cfg[c].location)].owner;
            if (owner == Player::Reacher) {
                bool boundary = false;
                for (std::size_t k = fwd_off[c]; k < fwd_off[c + 1] && !boundary; ++k)
                    boundary = fwd_succ[k] == kBoundary;
                if (boundary) mark(c, 1);
            } else if (pending[c] == 0) {
                mark(c, 1);  // every enabled move leaves the window
            }
        }
    }

    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        for (std::size_t k = rev_off[c]; k < rev_off[c + 1]; ++k) {
            const std::size_t p = rev_pred[k];
            if (win[p]) continue;
            if (sys.locations[static_cast<size_t>(cfg[p].location)].owner == Player::Reacher) {
                mark(p, region.rank[c] + 1);
            } else if (--pending[p] == 0) {
                mark(p, region.rank[c] + 1);
            }
        }
    }

    for (std::size_t c = 0; c < total; ++c) region.verdicts[c] = win[c] ? Verdict::Win : Verdict::Lose;
    return region;
}

RegionResult certain_region(const GameInstance& game, const Window& window) {
    RegionResult pess = solve_bounded(game, window, BoundaryPolicy::Pessimistic);
    RegionResult opt = solve_bounded(game, window, BoundaryPolicy::Optimistic);
    RegionResult out = pess;  // keeps pessimistic ranks for Win configurations
    for (std::size_t c = 0; c < out.size(); ++c) {
        if (pess.verdicts[c] == Verdict::Win)
            out.verdicts[c] = Verdict::Win;
        else if (opt.verdicts[c] == Verdict::Lose)
            out.verdicts[c] = Verdict::Lose;
        else
            out.verdicts[c] = Verdict::Unknown;
    }
    return out;
}

PositionalStrategy extract_strategy(const GameInstance& game, const RegionResult& region, Player player) {
    const CounterSystem& sys = game.system;
    PositionalStrategy strat;
    strat.player = player;

    std::vector<std::vector<int>> out(sys.locations.size());
    for (int e = 0; e < static_cast<int>(sys.edges.size()); ++e) out[static_cast<size_t>(sys.edges[e].src)].push_back(e);

    for (std::size_t c = 0; c < region.size(); ++c) {
        Configuration cfg = region.config_at(c);
        if (sys.locations[static_cast<size_t>(cfg.location)].owner != player) continue;

        if (player == Player::Reacher) {
            if (region.verdicts[c] != Verdict::Win) continue;
            if (objective_matches(game.objective, cfg)) continue;  // play already over
            for (int e : out[static_cast<size_t>(cfg.location)]) {
                if (!edge_enabled(game.semantics, cfg, sys.edges[static_cast<size_t>(e)])) continue;
                auto idx = region.index_of(apply_edge(game.semantics, cfg, sys.edges[static_cast<size_t>(e)]));
                if (idx && region.verdicts[*idx] == Verdict::Win && region.rank[*idx] < region.rank[c]) {
                    strat.moves.emplace(std::move(cfg), e);
                    break;
                }
            }
        } else {
            if (region.verdicts[c] != Verdict::Lose) continue;
            for (int e : out[static_cast<size_t>(cfg.location)]) {
                if (!edge_enabled(game.semantics, cfg, sys.edges[static_cast<size_t>(e)])) continue;
                auto idx = region.index_of(apply_edge(game.semantics, cfg, sys.edges[static_cast<size_t>(e)]));
                if (idx && region.verdicts[*idx] == Verdict::Lose) {
                    strat.moves.emplace(std::move(cfg), e);
                    break;
                }
            }
        }
    }
    return strat;
}

Play simulate(const GameInstance& game, const PositionalStrategy* reacher,
              const PositionalStrategy* opponent, const Configuration& start, int max_steps,
              std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, 0x51));
    Play play;
    play.configs.push_back(start);
    int moves = 0;

    for (;;) {
        const Configuration& here = play.configs.back();
        if (objective_matches(game.objective, here)) {
            play.status = Play::Status::ReachedObjective;
            return play;
        }
        if (moves >= max_steps) {
            play.status = Play::Status::StepLimit;
            return play;
        }
        const Player mover = game.system.locations[static_cast<size_t>(here.location)].owner;
        std::vector<int> enabled = enabled_edges(game.system, game.semantics, here);
        if (enabled.empty()) {
            play.status = Play::Status::Deadlock;
            play.deadlock_loser = mover;
            return play;
        }

        int choice = -1;
        const PositionalStrategy* strat = mover == Player::Reacher ? reacher : opponent;
        if (strat) {
            auto it = strat->moves.find(here);
            if (it != strat->moves.end() &&
                std::find(enabled.begin(), enabled.end(), it->second) != enabled.end())
                choice = it->second;
        }
        if (choice < 0) choice = enabled[rng_below(rng, enabled.size())];

        play.configs.push_back(apply_edge(game.semantics, here, game.system.edges[static_cast<size_t>(choice)]));
        ++moves;
    }
}

std::vector<DownwardViolation> check_downward_closure(const GameInstance& game,
                                                      const RegionResult& region) {
    if (game.semantics != Semantics::NonBlockingVass || game.system.dimension != 1 ||
        game.objective.kind != Objective::Kind::SingleConfig || game.objective.target.counters[0] != 0)
        throw std::invalid_argument(
            "check_downward_closure requires NB-VASS, d=1, single objective at counter 0");

    std::vector<DownwardViolation> out;
    const auto [lo, hi] = region.window.bounds[0];
    for (int q = 0; q < region.num_locations; ++q) {
        for (Counter x = lo; x <= hi; ++x) {
            Configuration cwin{q, {x}};
            if (region.at(cwin) != Verdict::Win) continue;
            for (Counter y = lo; y < x; ++y) {
                Configuration clo{q, {y}};
                if (region.at(clo) == Verdict::Lose) out.push_back({cwin, clo});
            }
        }
    }
    return out;
}

}  // namespace crg
