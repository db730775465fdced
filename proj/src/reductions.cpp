#include "crg/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crg {

namespace {

class FreshNames {
public:
    explicit FreshNames(const CounterSystem& sys) {
        for (const Location& l : sys.locations) used_.insert(l.name);
    }

    std::string fresh(const std::string& base) {
        if (used_.insert(base).second) return base;
        for (int i = 2;; ++i) {
            std::string candidate = base + "." + std::to_string(i);
            if (used_.insert(candidate).second) return candidate;
        }
    }

private:
    std::set<std::string> used_;
};

Player adversary(Player p) { return p == Player::Reacher ? Player::Opponent : Player::Reacher; }

CounterVec zeros(int d) { return CounterVec(static_cast<size_t>(d), 0); }

CounterVec unit(int d, int i, Counter value) {
    CounterVec v = zeros(d);
    v[static_cast<size_t>(i)] = value;
    return v;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_valid(const GameInstance& game, const char* who) {
    if (!validate(game).empty()) throw std::invalid_argument(std::string(who) + ": input instance invalid");
}

ReductionOutput identity_output(const GameInstance& game) {
    ReductionOutput out;
    out.game = game;
    out.config_map = [](const Configuration& c) { return c; };
    return out;
}

}  // namespace

Configuration map_config(const ReductionOutput& output, const Configuration& config) {
    return output.config_map(config);
}

ReductionOutput normalize_reacher_objective(const GameInstance& game) {
    require_valid(game, "normalize_reacher_objective");
    require(game.objective.kind == Objective::Kind::SingleConfig,
            "normalize_reacher_objective: objective must be a single configuration");

    const int qf = game.objective.target.location;
    if (game.system.locations[static_cast<size_t>(qf)].owner == Player::Reacher) return identity_output(game);

    ReductionOutput out;
    out.game = game;
    CounterSystem& sys = out.game.system;

    FreshNames names(sys);
    const std::string qfp_name = names.fresh(sys.locations[static_cast<size_t>(qf)].name + ".r");
    const int qfp = static_cast<int>(sys.locations.size());
    sys.locations.push_back({qfp_name, Player::Reacher});
    out.fresh_names["qf_prime"] = qfp_name;

    for (Edge& e : sys.edges)
        if (e.dst == qf) e.dst = qfp;
    sys.edges.push_back({qfp, zeros(sys.dimension), qf});

    out.game.objective = Objective::single({qfp, game.objective.target.counters});
    out.config_map = [qf, qfp](const Configuration& c) {
        return c.location == qf ? Configuration{qfp, c.counters} : c;
    };
    out.game.initial = out.config_map(game.initial);
    out.notes.push_back("objective location was Opponent-owned; interposed Reacher location " + qfp_name);
    if (game.initial.location == qf)
        out.notes.push_back("initial location coincides with the objective location; remapped to " +
                            qfp_name + " so an immediate objective visit is preserved");
    return out;
}

ReductionOutput shift_objective_to_zero(const GameInstance& game) {
    require_valid(game, "shift_objective_to_zero");
    require(game.semantics == Semantics::Z, "shift_objective_to_zero: Z semantics only");
    require(game.objective.kind == Objective::Kind::SingleConfig,
            "shift_objective_to_zero: objective must be a single configuration");

    const CounterVec shift = game.objective.target.counters;
    if (std::all_of(shift.begin(), shift.end(), [](Counter c) { return c == 0; }))
        return identity_output(game);

    ReductionOutput out;
    out.game = game;
    out.config_map = [shift](const Configuration& c) {
        Configuration m = c;
        for (size_t i = 0; i < shift.size(); ++i) m.counters[i] -= shift[i];
        return m;
    };
    out.game.initial = out.config_map(game.initial);
    out.game.objective = Objective::single({game.objective.target.location, zeros(game.system.dimension)});
    return out;
}

ReductionOutput split_to_short_range(const GameInstance& game) {
    require_valid(game, "split_to_short_range");
    require(game.objective.kind == Objective::Kind::SingleConfig,
            "split_to_short_range: objective must be a single configuration");

    ReductionOutput out;
    out.game = game;
    CounterSystem& sys = out.game.system;
    sys.edges.clear();

    FreshNames names(game.system);
    const int d = sys.dimension;
    bool split_any = false;

    for (size_t ei = 0; ei < game.system.edges.size(); ++ei) {
        const Edge& e = game.system.edges[ei];
        Counter m = 0;
        for (Counter c : e.label) m = std::max(m, c < 0 ? -c : c);
        if (m <= 1) {
            sys.edges.push_back(e);
            continue;
        }
        split_any = true;
        const Player owner = game.system.locations[static_cast<size_t>(e.src)].owner;
        int cur = e.src;
        for (Counter k = 1; k <= m; ++k) {
            CounterVec step(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) {
                Counter v = e.label[static_cast<size_t>(i)];
                Counter mag = v < 0 ? -v : v;
                step[static_cast<size_t>(i)] = k <= mag ? (v < 0 ? -1 : 1) : 0;
            }
            int next;
            if (k == m) {
                next = e.dst;
            } else {
                std::string name = names.fresh("chain." + std::to_string(ei) + "." + std::to_string(k));
                next = static_cast<int>(sys.locations.size());
                sys.locations.push_back({name, owner});
                out.fresh_names["chain:" + std::to_string(ei) + ":" + std::to_string(k)] = name;
            }
            sys.edges.push_back({cur, std::move(step), next});
            cur = next;
        }
    }

    out.config_map = [](const Configuration& c) { return c; };
    if (split_any)
        out.notes.push_back("long edges split into unit-step chains through choice-free locations");
    return out;
}

ReductionOutput vass_to_z(const GameInstance& game, GadgetVariant variant) {
    require_valid(game, "vass_to_z");
    require(game.semantics == Semantics::Vass, "vass_to_z: Vass semantics only");
    require(game.objective.kind == Objective::Kind::SingleConfig,
            "vass_to_z: objective must be a single configuration");
    const int qf = game.objective.target.location;
    require(game.system.locations[static_cast<size_t>(qf)].owner == Player::Reacher,
            "vass_to_z: objective location must be Reacher-owned (normalize first)");

    const CounterSystem& src = game.system;
    const int d = src.dimension;

    ReductionOutput out;
    out.game.semantics = Semantics::Z;
    CounterSystem& sys = out.game.system;
    sys.dimension = d;
    sys.locations = src.locations;

    FreshNames names(src);
    auto add_loc = [&](const std::string& base, Player owner, const std::string& role) {
        std::string name = names.fresh(base);
        sys.locations.push_back({name, owner});
        out.fresh_names[role] = name;
        return static_cast<int>(sys.locations.size()) - 1;
    };

    // test location per edge with a negative label component; Reacher owns
    // the ones guarding Opponent moves
    std::vector<int> test_of(src.edges.size(), -1);
    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const Edge& e = src.edges[ei];
        if (std::all_of(e.label.begin(), e.label.end(), [](Counter c) { return c >= 0; })) continue;
        Player owner = adversary(src.locations[static_cast<size_t>(e.src)].owner);
        test_of[ei] = add_loc("test." + std::to_string(ei), owner, "test:" + std::to_string(ei));
    }
    const int check = add_loc("check", Player::Reacher, "check");
    std::vector<int> check_i(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        check_i[static_cast<size_t>(i)] = add_loc("check." + std::to_string(i + 1), Player::Reacher,
                                                  "check:" + std::to_string(i + 1));
    const int bot = add_loc("bot", Player::Reacher, "bot");

    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const Edge& e = src.edges[ei];
        if (test_of[ei] < 0) {
            sys.edges.push_back(e);
            continue;
        }
        const int t = test_of[ei];
        sys.edges.push_back({e.src, e.label, t});
        sys.edges.push_back({t, zeros(d), e.dst});
        if (src.locations[static_cast<size_t>(e.src)].owner == Player::Reacher) {
            sys.edges.push_back({t, zeros(d), check});
        } else {
            for (int i = 0; i < d; ++i) {
                CounterVec entry = variant == GadgetVariant::Figure ? unit(d, i, 1) : zeros(d);
                sys.edges.push_back({t, std::move(entry), check_i[static_cast<size_t>(i)]});
            }
        }
    }

    for (int i = 0; i < d; ++i) sys.edges.push_back({check, unit(d, i, -1), check});
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            if (j != i)
                sys.edges.push_back({check_i[static_cast<size_t>(i)], unit(d, j, -1), check_i[static_cast<size_t>(i)]});
        for (int j = 0; j < d; ++j)
            sys.edges.push_back({check_i[static_cast<size_t>(i)], unit(d, j, 1), check_i[static_cast<size_t>(i)]});
    }

    CounterVec neg_xf = game.objective.target.counters;
    for (Counter& c : neg_xf) c = -c;
    sys.edges.push_back({qf, std::move(neg_xf), bot});
    sys.edges.push_back({bot, zeros(d), bot});
    sys.edges.push_back({check, zeros(d), bot});
    for (int i = 0; i < d; ++i) sys.edges.push_back({check_i[static_cast<size_t>(i)], zeros(d), bot});

    out.game.objective = Objective::single({bot, zeros(d)});
    out.game.initial = game.initial;
    out.config_map = [](const Configuration& c) { return c; };
    out.notes.push_back(variant == GadgetVariant::Figure
                            ? "check entry edges increment the tested coordinate (figure variant)"
                            : "check entry edges carry the zero label (align variant)");
    return out;
}

ReductionOutput axis_zero_to_single(const GameInstance& game) {
    require_valid(game, "axis_zero_to_single");
    require(game.system.dimension == 2, "axis_zero_to_single: dimension must be 2");
    require(game.semantics == Semantics::Vass, "axis_zero_to_single: Vass semantics only");
    require(game.objective.kind == Objective::Kind::AxisZero,
            "axis_zero_to_single: objective must be axiszero");
    for (int q : game.objective.location_set)
        require(game.system.locations[static_cast<size_t>(q)].owner == Player::Reacher,
                "axis_zero_to_single: objective locations must be Reacher-owned");

    ReductionOutput out;
    out.game = game;
    CounterSystem& sys = out.game.system;

    FreshNames names(game.system);
    auto add_loc = [&](const std::string& base, const std::string& role) {
        std::string name = names.fresh(base);
        sys.locations.push_back({name, Player::Reacher});
        out.fresh_names[role] = name;
        return static_cast<int>(sys.locations.size()) - 1;
    };
    const int empty1 = add_loc("empty.1", "empty:1");
    const int empty2 = add_loc("empty.2", "empty:2");
    const int bot = add_loc("bot", "bot");

    for (int q : game.objective.location_set) {
        sys.edges.push_back({q, {0, 0}, empty1});
        sys.edges.push_back({q, {0, 0}, empty2});
    }
    sys.edges.push_back({empty1, {-1, 0}, empty1});
    sys.edges.push_back({empty2, {0, -1}, empty2});
    sys.edges.push_back({empty1, {0, 0}, bot});
    sys.edges.push_back({empty2, {0, 0}, bot});
    sys.edges.push_back({bot, {0, 0}, bot});

    out.game.objective = Objective::single({bot, {0, 0}});
    out.config_map = [](const Configuration& c) { return c; };
    return out;
}

ReductionOutput z_to_vass(const GameInstance& game) {
    require_valid(game, "z_to_vass");
    require(game.system.dimension == 1, "z_to_vass: dimension must be 1");
    require(game.semantics == Semantics::Z, "z_to_vass: Z semantics only");
    require(is_short_range(game.system), "z_to_vass: input must be short-range");
    require(game.objective.kind == Objective::Kind::SingleConfig &&
                game.objective.target.counters[0] == 0,
            "z_to_vass: objective must be a single configuration at counter 0");
    const int qf = game.objective.target.location;
    require(game.system.locations[static_cast<size_t>(qf)].owner == Player::Reacher,
            "z_to_vass: objective location must be Reacher-owned (normalize first)");

    const CounterSystem& src = game.system;
    const int n = static_cast<int>(src.locations.size());

    ReductionOutput out;
    out.game.semantics = Semantics::Vass;
    CounterSystem& sys = out.game.system;
    sys.dimension = 1;

    FreshNames names(src);
    // plus copies, then minus copies, owners carried over
    for (const Location& l : src.locations) sys.locations.push_back({names.fresh(l.name + ".plus"), l.owner});
    for (const Location& l : src.locations) sys.locations.push_back({names.fresh(l.name + ".minus"), l.owner});
    for (int q = 0; q < n; ++q) {
        out.fresh_names["plus:" + src.locations[static_cast<size_t>(q)].name] = sys.locations[static_cast<size_t>(q)].name;
        out.fresh_names["minus:" + src.locations[static_cast<size_t>(q)].name] = sys.locations[static_cast<size_t>(q + n)].name;
    }
    auto plus = [n](int q) { return q; };
    auto minus = [n](int q) { return q + n; };

    std::vector<int> qe_of(src.edges.size(), -1);
    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const Edge& e = src.edges[ei];
        if (e.label[0] != 1 && e.label[0] != -1) continue;
        Player owner = adversary(src.locations[static_cast<size_t>(e.src)].owner);
        std::string name = names.fresh("qe." + std::to_string(ei));
        qe_of[ei] = static_cast<int>(sys.locations.size());
        sys.locations.push_back({name, owner});
        out.fresh_names["qe:" + std::to_string(ei)] = name;
    }
    const int no = static_cast<int>(sys.locations.size());
    sys.locations.push_back({names.fresh("no"), Player::Reacher});
    out.fresh_names["no"] = sys.locations.back().name;
    const int bot = static_cast<int>(sys.locations.size());
    sys.locations.push_back({names.fresh("bot"), Player::Reacher});
    out.fresh_names["bot"] = sys.locations.back().name;

    for (const Edge& e : src.edges) sys.edges.push_back({plus(e.src), {e.label[0]}, plus(e.dst)});
    for (const Edge& e : src.edges) sys.edges.push_back({minus(e.src), {-e.label[0]}, minus(e.dst)});

    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        if (qe_of[ei] < 0) continue;
        const Edge& e = src.edges[ei];
        const int qe = qe_of[ei];
        const bool reacher_src = src.locations[static_cast<size_t>(e.src)].owner == Player::Reacher;
        // value +1 from the minus copy means leaving -N; -1 from the plus
        // copy means leaving N. Crossing is legal only at counter 0 and the
        // adversary-owned checkpoint punishes anything else.
        const int from = e.label[0] == 1 ? minus(e.src) : plus(e.src);
        const int to = e.label[0] == 1 ? plus(e.dst) : minus(e.dst);
        sys.edges.push_back({from, {0}, qe});
        if (reacher_src)
            sys.edges.push_back({qe, {0}, bot});
        else
            sys.edges.push_back({qe, {-1}, no});
        sys.edges.push_back({qe, {1}, to});
    }

    sys.edges.push_back({no, {-1}, no});
    sys.edges.push_back({no, {0}, bot});
    sys.edges.push_back({plus(qf), {0}, bot});
    sys.edges.push_back({minus(qf), {0}, bot});
    sys.edges.push_back({bot, {0}, bot});

    out.game.objective = Objective::single({bot, {0}});
    out.config_map = [n](const Configuration& c) {
        return c.counters[0] >= 0 ? Configuration{c.location, c.counters}
                                  : Configuration{c.location + n, {-c.counters[0]}};
    };
    out.game.initial = out.config_map(game.initial);
    return out;
}

ReductionOutput nbvass_one_to_vass_zero(const GameInstance& game, GadgetVariant variant) {
    require_valid(game, "nbvass_one_to_vass_zero");
    require(game.system.dimension == 1, "nbvass_one_to_vass_zero: dimension must be 1");
    require(game.semantics == Semantics::NonBlockingVass,
            "nbvass_one_to_vass_zero: non-blocking VASS semantics only");
    require(is_short_range(game.system), "nbvass_one_to_vass_zero: input must be short-range");
    require(game.objective.kind == Objective::Kind::SingleConfig &&
                game.objective.target.counters[0] == 1,
            "nbvass_one_to_vass_zero: objective must be a single configuration at counter 1");
    const int qf = game.objective.target.location;
    require(game.system.locations[static_cast<size_t>(qf)].owner == Player::Reacher,
            "nbvass_one_to_vass_zero: objective location must be Reacher-owned (normalize first)");

    const CounterSystem& src = game.system;

    ReductionOutput out;
    out.game.semantics = Semantics::Vass;
    CounterSystem& sys = out.game.system;
    sys.dimension = 1;
    sys.locations = src.locations;

    FreshNames names(src);
    auto add_loc = [&](const std::string& base, Player owner, const std::string& role) {
        std::string name = names.fresh(base);
        sys.locations.push_back({name, owner});
        out.fresh_names[role] = name;
        return static_cast<int>(sys.locations.size()) - 1;
    };

    struct Gadget {
        int qe, pos, zer;
    };
    std::vector<Gadget> gadget_of(src.edges.size(), {-1, -1, -1});
    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        if (src.edges[ei].label[0] != -1) continue;
        const std::string id = std::to_string(ei);
        gadget_of[ei] = {add_loc("qe." + id, Player::Opponent, "qe:" + id),
                         add_loc("pos." + id, Player::Reacher, "pos:" + id),
                         add_loc("zero." + id, Player::Reacher, "zero:" + id)};
    }
    const int no = add_loc("no", Player::Reacher, "no");
    const int bot = add_loc("bot", Player::Reacher, "bot");

    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const Edge& e = src.edges[ei];
        if (gadget_of[ei].qe < 0) {
            sys.edges.push_back(e);
            continue;
        }
        const auto [qe, pos, zer] = gadget_of[ei];
        sys.edges.push_back({e.src, {0}, qe});
        sys.edges.push_back({qe, {0}, pos});
        sys.edges.push_back({qe, {0}, zer});
        sys.edges.push_back({zer, {0}, e.dst});
        sys.edges.push_back({pos, {-1}, e.dst});
        sys.edges.push_back({pos, {0}, bot});
        sys.edges.push_back({zer, {-1}, variant == GadgetVariant::Figure ? no : bot});
    }

    sys.edges.push_back({no, {-1}, no});
    sys.edges.push_back({no, {0}, bot});
    sys.edges.push_back({qf, {-1}, bot});
    sys.edges.push_back({bot, {0}, bot});

    out.game.objective = Objective::single({bot, {0}});
    out.game.initial = game.initial;
    out.config_map = [](const Configuration& c) { return c; };
    out.notes.push_back(variant == GadgetVariant::Figure
                            ? "zero-claim punishment routes through the no location (figure variant)"
                            : "zero-claim punishment goes straight to bot (align variant; wrong for "
                              "counter values >= 2)");
    return out;
}

ReductionOutput vass_zero_to_nbvass_one(const GameInstance& game) {
    require_valid(game, "vass_zero_to_nbvass_one");
    require(game.system.dimension == 1, "vass_zero_to_nbvass_one: dimension must be 1");
    require(game.semantics == Semantics::Vass, "vass_zero_to_nbvass_one: Vass semantics only");
    require(game.objective.kind == Objective::Kind::SingleConfig &&
                game.objective.target.counters[0] == 0,
            "vass_zero_to_nbvass_one: objective must be a single configuration at counter 0");
    const int qf = game.objective.target.location;
    require(game.system.locations[static_cast<size_t>(qf)].owner == Player::Reacher,
            "vass_zero_to_nbvass_one: objective location must be Reacher-owned (normalize first)");

    const CounterSystem& src = game.system;

    ReductionOutput out;
    out.game.semantics = Semantics::NonBlockingVass;
    CounterSystem& sys = out.game.system;
    sys.dimension = 1;
    sys.locations = src.locations;

    FreshNames names(src);
    auto add_loc = [&](const std::string& base, Player owner, const std::string& role) {
        std::string name = names.fresh(base);
        sys.locations.push_back({name, owner});
        out.fresh_names[role] = name;
        return static_cast<int>(sys.locations.size()) - 1;
    };

    bool reacher_neg = false, opponent_neg = false;
    for (const Edge& e : src.edges) {
        if (e.label[0] >= 0) continue;
        (src.locations[static_cast<size_t>(e.src)].owner == Player::Reacher ? reacher_neg : opponent_neg) = true;
    }

    std::vector<int> qe_of(src.edges.size(), -1);
    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const Edge& e = src.edges[ei];
        if (e.label[0] >= 0) continue;  // only strictly negative edges split
        Player owner = adversary(src.locations[static_cast<size_t>(e.src)].owner);
        qe_of[ei] = add_loc("qe." + std::to_string(ei), owner, "qe:" + std::to_string(ei));
    }
    const int no_r = reacher_neg ? add_loc("no.r", Player::Reacher, "no_r") : -1;
    const int no_o = opponent_neg ? add_loc("no.o", Player::Opponent, "no_o") : -1;
    const int bot = add_loc("bot", Player::Reacher, "bot");

    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const Edge& e = src.edges[ei];
        if (qe_of[ei] < 0) {
            sys.edges.push_back(e);
            continue;
        }
        const int qe = qe_of[ei];
        const Counter v = e.label[0];
        const bool reacher_src = src.locations[static_cast<size_t>(e.src)].owner == Player::Reacher;
        sys.edges.push_back({e.src, {0}, qe});
        sys.edges.push_back({qe, {v}, e.dst});
        // the punishment arrives clamped to 0 exactly when the source edge
        // would have been disabled (counter < -v)
        sys.edges.push_back({qe, {v + 1}, reacher_src ? no_r : no_o});
    }

    if (no_r >= 0) {
        sys.edges.push_back({no_r, {-1}, no_r});
        sys.edges.push_back({no_r, {0}, bot});
    }
    if (no_o >= 0) sys.edges.push_back({no_o, {1}, bot});
    sys.edges.push_back({qf, {1}, bot});
    sys.edges.push_back({bot, {0}, bot});

    out.game.objective = Objective::single({bot, {1}});
    out.game.initial = game.initial;
    out.config_map = [](const Configuration& c) { return c; };
    return out;
}

}  // namespace crg
