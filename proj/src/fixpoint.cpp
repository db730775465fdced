#include "crg/fixpoint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crg {

std::string to_string(const Value& v) {
    switch (v.kind) {
        case Value::Kind::Bottom: return "bottom";
        case Value::Kind::Finite: return std::to_string(v.n);
        case Value::Kind::Top: return "top";
    }
    return "?";
}

Value transfer(const Value& m, Counter v) {
    switch (m.kind) {
        case Value::Kind::Bottom: return Value::bottom();
        case Value::Kind::Top: return Value::top();
        case Value::Kind::Finite: {
            const Counter shifted = m.n - v;
            return shifted >= 0 ? Value::finite(shifted) : Value::bottom();
        }
    }
    return Value::bottom();
}

FixpointParams FixpointParams::defaults(const CounterSystem& system, Counter queried_value) {
    Counter max_label = 0;
    for (const Edge& e : system.edges)
        for (Counter c : e.label) max_label = std::max(max_label, c < 0 ? -c : c);
    const Counter q = static_cast<Counter>(system.locations.size());
    FixpointParams p;
    p.cap = queried_value + q * (1 + max_label);
    p.max_rounds = q * (p.cap + 2);
    p.escalation = 3;
    return p;
}

namespace {

FixpointResult one_attempt(const CounterSystem& system, const std::vector<int>& objective_set,
                           const Configuration& query, Counter cap, std::int64_t max_rounds) {
    const int n = static_cast<int>(system.locations.size());
    const Value goal = Value::finite(query.counters[0]);

    std::vector<std::vector<size_t>> out(static_cast<size_t>(n));
    for (size_t e = 0; e < system.edges.size(); ++e) out[static_cast<size_t>(system.edges[e].src)].push_back(e);

    FixpointResult res;
    res.cap_used = cap;
    res.table.assign(static_cast<size_t>(n), Value::bottom());
    for (int q : objective_set) res.table[static_cast<size_t>(q)] = Value::finite(0);

    auto clamp = [&](Value v) {
        if (v.kind == Value::Kind::Finite && v.n > cap) {
            res.clamped = true;
            return Value::finite(cap);
        }
        return v;
    };

    if (goal <= res.table[static_cast<size_t>(query.location)]) {
        res.status = FixpointResult::Status::EarlyYes;
        res.rounds = 0;
        return res;
    }

    for (std::int64_t round = 1; round <= max_rounds; ++round) {
        ValueTable next = res.table;
        for (int q = 0; q < n; ++q) {
            const auto& edges = out[static_cast<size_t>(q)];
            Value update;
            if (system.locations[static_cast<size_t>(q)].owner == Player::Reacher) {
                update = Value::bottom();  // empty max: contributes nothing
                for (size_t e : edges) {
                    Value t = transfer(res.table[static_cast<size_t>(system.edges[e].dst)], system.edges[e].label[0]);
                    update = std::max(update, t);
                }
            } else if (edges.empty()) {
                update = Value::top();  // stuck Opponent loses from any value
            } else {
                update = Value::top();
                for (size_t e : edges) {
                    Value t = transfer(res.table[static_cast<size_t>(system.edges[e].dst)], system.edges[e].label[0]);
                    update = std::min(update, t);
                }
            }
            next[static_cast<size_t>(q)] = clamp(std::max(next[static_cast<size_t>(q)], update));
        }

        const bool changed = next != res.table;
        res.table = std::move(next);
        res.rounds = round;
        if (goal <= res.table[static_cast<size_t>(query.location)]) {
            res.status = FixpointResult::Status::EarlyYes;
            return res;
        }
        if (!changed) {
            res.status = res.clamped ? FixpointResult::Status::CapSaturated
                                     : FixpointResult::Status::ExactFixpoint;
            return res;
        }
    }
    res.status = FixpointResult::Status::CapSaturated;
    return res;
}

}  // namespace

FixpointResult nb_fixpoint(const CounterSystem& system, const std::vector<int>& objective_set,
                           const Configuration& query, const FixpointParams& params) {
    if (system.dimension != 1) throw std::invalid_argument("nb_fixpoint: dimension must be 1");
    if (!validate(system).empty()) throw std::invalid_argument("nb_fixpoint: system invalid");
    if (query.location < 0 || query.location >= static_cast<int>(system.locations.size()))
        throw std::invalid_argument("nb_fixpoint: query location out of range");
    if (query.counters.size() != 1 || query.counters[0] < 0)
        throw std::invalid_argument("nb_fixpoint: query needs one nonnegative counter");
    for (int q : objective_set)
        if (q < 0 || q >= static_cast<int>(system.locations.size()))
            throw std::invalid_argument("nb_fixpoint: objective location out of range");
    if (params.cap < query.counters[0])
        throw std::invalid_argument("nb_fixpoint: cap below queried value");

    Counter cap = params.cap;
    std::int64_t max_rounds = params.max_rounds;
    FixpointResult res;
    for (int attempt = 0;; ++attempt) {
        res = one_attempt(system, objective_set, query, cap, max_rounds);
        if (res.status != FixpointResult::Status::CapSaturated || attempt >= params.escalation)
            return res;
        cap *= 2;  // escalate: rounds scale with the cap
        max_rounds *= 2;
    }
}

QzResult compute_qz(const CounterSystem& system, int q_f, const FixpointParams& params) {
    if (system.dimension != 1) throw std::invalid_argument("compute_qz: dimension must be 1");
    if (q_f < 0 || q_f >= static_cast<int>(system.locations.size()))
        throw std::invalid_argument("compute_qz: location out of range");

    QzResult qz;
    const std::vector<int> objective{q_f};
    for (int q = 0; q < static_cast<int>(system.locations.size()); ++q) {
        FixpointResult r = nb_fixpoint(system, objective, {q, {0}}, params);
        qz.peak_rounds = std::max(qz.peak_rounds, r.rounds);
        switch (r.status) {
            case FixpointResult::Status::EarlyYes:
                qz.members.push_back(q);
                break;
            case FixpointResult::Status::ExactFixpoint:
                if (Value::finite(0) <= r.table[static_cast<size_t>(q)]) qz.members.push_back(q);
                break;
            case FixpointResult::Status::CapSaturated:
                qz.unknown.push_back(q);
                break;
        }
    }
    return qz;
}

QzResult compute_qz(const CounterSystem& system, int q_f) {
    return compute_qz(system, q_f, FixpointParams::defaults(system, 0));
}

GameInstance build_qz_vass(const CounterSystem& system, const std::vector<int>& qz) {
    if (system.dimension != 1) throw std::invalid_argument("build_qz_vass: dimension must be 1");
    std::vector<int> remap(system.locations.size(), -1);
    GameInstance out;
    out.semantics = Semantics::Vass;
    out.system.dimension = 1;
    for (int q : qz) {
        if (q < 0 || q >= static_cast<int>(system.locations.size()))
            throw std::invalid_argument("build_qz_vass: Q_Z location out of range");
        if (remap[static_cast<size_t>(q)] >= 0) continue;
        remap[static_cast<size_t>(q)] = static_cast<int>(out.system.locations.size());
        out.system.locations.push_back(system.locations[static_cast<size_t>(q)]);
    }

    std::string bot_name = "bot";
    {
        int suffix = 2;
        while (out.system.find_location(bot_name) >= 0) bot_name = "bot." + std::to_string(suffix++);
    }
    const int bot = static_cast<int>(out.system.locations.size());
    out.system.locations.push_back({bot_name, Player::Reacher});

    for (const Edge& e : system.edges) {
        const int s = remap[static_cast<size_t>(e.src)];
        if (s < 0) continue;
        const int t = remap[static_cast<size_t>(e.dst)];
        if (t >= 0)
            out.system.edges.push_back({s, e.label, t});
        else
            out.system.edges.push_back({s, {1}, bot});  // exits keep the counter positive
    }
    out.system.edges.push_back({bot, {0}, bot});

    std::vector<int> all(out.system.locations.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    out.objective = Objective::locations_at_zero(std::move(all));
    out.initial = {0, {0}};
    return out;
}

Decision decide_nbvass_zero(const GameInstance& game, const FixpointParams& params) {
    if (game.semantics != Semantics::NonBlockingVass)
        throw std::invalid_argument("decide_nbvass_zero: non-blocking VASS semantics only");
    if (game.system.dimension != 1) throw std::invalid_argument("decide_nbvass_zero: dimension must be 1");
    if (game.objective.kind != Objective::Kind::SingleConfig || game.objective.target.counters[0] != 0)
        throw std::invalid_argument("decide_nbvass_zero: objective must be a single configuration at counter 0");
    if (!validate(game).empty()) throw std::invalid_argument("decide_nbvass_zero: instance invalid");

    Decision d;
    d.qz = compute_qz(game.system, game.objective.target.location, params);
    d.final_stage = nb_fixpoint(game.system, d.qz.members, game.initial, params);
    d.peak_rounds = std::max(d.qz.peak_rounds, d.final_stage.rounds);

    std::ostringstream why;
    switch (d.final_stage.status) {
        case FixpointResult::Status::EarlyYes:
            d.verdict = Verdict::Win;
            why << "Reacher forces a zero at a Q_Z location from the initial configuration";
            break;
        case FixpointResult::Status::ExactFixpoint:
            if (d.qz.unknown.empty()) {
                d.verdict = Verdict::Lose;
                why << "clean fixpoint below the initial value; Q_Z fully resolved";
            } else {
                d.verdict = Verdict::Unknown;
                why << d.qz.unknown.size() << " location(s) have unresolved Q_Z membership";
            }
            break;
        case FixpointResult::Status::CapSaturated:
            d.verdict = Verdict::Unknown;
            why << "value table saturated at cap " << d.final_stage.cap_used << " after escalation";
            break;
    }
    d.explain = why.str();
    return d;
}

Decision decide_nbvass_zero(const GameInstance& game) {
    return decide_nbvass_zero(game, FixpointParams::defaults(game.system, game.initial.counters[0]));
}

std::string format_value_table(const CounterSystem& system, const ValueTable& table) {
    std::ostringstream out;
    for (size_t q = 0; q < system.locations.size(); ++q)
        out << "value " << system.locations[q].name << ' ' << to_string(table[q]) << "\n";
    return out.str();
}

}  // namespace crg
