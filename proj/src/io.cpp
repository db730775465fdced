#include "crg/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "crg/random.hpp"

namespace crg {

namespace {

struct Tok {
    std::string text;
    int col;  // 1-based start column
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> toks;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
        toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return toks;
}

Counter parse_int(const Tok& t, int line) {
    const std::string& s = t.text;
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (pos >= s.size()) throw ParseError(line, t.col, "expected integer, got '" + s + "'");
    Counter value = 0;
    constexpr Counter limit = std::numeric_limits<Counter>::max();
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw ParseError(line, t.col, "expected integer, got '" + s + "'");
        const Counter digit = s[pos] - '0';
        if (value > (limit - digit) / 10) throw ParseError(line, t.col, "integer out of range");
        value = value * 10 + digit;
    }
    return neg ? -value : value;
}

int lookup_loc(const CounterSystem& sys, const Tok& t, int line) {
    int idx = sys.find_location(t.text);
    if (idx < 0) throw ParseError(line, t.col, "unknown location '" + t.text + "'");
    return idx;
}

CounterVec parse_vector(const std::vector<Tok>& toks, size_t from, int dim, int line) {
    if (static_cast<int>(toks.size() - from) != dim)
        throw ParseError(line, toks[0].col,
                         "expected " + std::to_string(dim) + " counter value(s), got " +
                             std::to_string(toks.size() - from));
    CounterVec v;
    for (size_t i = from; i < toks.size(); ++i) v.push_back(parse_int(toks[i], line));
    return v;
}

}  // namespace

GameInstance parse(const std::string& text) {
    GameInstance game;
    bool saw_header = false, saw_dim = false, saw_sem = false, saw_init = false, saw_obj = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;

        if (!saw_header) {
            if (toks[0].text != "crg-v1" || toks.size() != 1)
                throw ParseError(line, toks[0].col, "expected header 'crg-v1'");
            saw_header = true;
            continue;
        }

        const std::string& dir = toks[0].text;
        if (dir == "dim") {
            if (saw_dim) throw ParseError(line, toks[0].col, "duplicate 'dim' directive");
            if (toks.size() != 2) throw ParseError(line, toks[0].col, "usage: dim <d>");
            Counter d = parse_int(toks[1], line);
            if (d < 1) throw ParseError(line, toks[1].col, "dimension must be >= 1");
            game.system.dimension = static_cast<int>(d);
            saw_dim = true;
        } else if (dir == "semantics") {
            if (saw_sem) throw ParseError(line, toks[0].col, "duplicate 'semantics' directive");
            if (toks.size() != 2) throw ParseError(line, toks[0].col, "usage: semantics z|vass|nbvass");
            const std::string& s = toks[1].text;
            if (s == "z")
                game.semantics = Semantics::Z;
            else if (s == "vass")
                game.semantics = Semantics::Vass;
            else if (s == "nbvass")
                game.semantics = Semantics::NonBlockingVass;
            else
                throw ParseError(line, toks[1].col, "unknown semantics '" + s + "'");
            saw_sem = true;
        } else if (dir == "loc") {
            if (toks.size() != 3) throw ParseError(line, toks[0].col, "usage: loc <name> R|O");
            if (!valid_name(toks[1].text))
                throw ParseError(line, toks[1].col, "bad location name '" + toks[1].text + "'");
            if (game.system.find_location(toks[1].text) >= 0)
                throw ParseError(line, toks[1].col, "duplicate location '" + toks[1].text + "'");
            Player owner;
            if (toks[2].text == "R")
                owner = Player::Reacher;
            else if (toks[2].text == "O")
                owner = Player::Opponent;
            else
                throw ParseError(line, toks[2].col, "owner must be R or O");
            game.system.locations.push_back({toks[1].text, owner});
        } else if (dir == "edge") {
            if (!saw_dim) throw ParseError(line, toks[0].col, "'edge' before 'dim'");
            if (toks.size() < 3) throw ParseError(line, toks[0].col, "usage: edge <src> <dst> <label...>");
            Edge e;
            e.src = lookup_loc(game.system, toks[1], line);
            e.dst = lookup_loc(game.system, toks[2], line);
            e.label = parse_vector(toks, 3, game.system.dimension, line);
            game.system.edges.push_back(std::move(e));
        } else if (dir == "init") {
            if (!saw_dim) throw ParseError(line, toks[0].col, "'init' before 'dim'");
            if (saw_init) throw ParseError(line, toks[0].col, "duplicate 'init' directive");
            if (toks.size() < 2) throw ParseError(line, toks[0].col, "usage: init <loc> <counters...>");
            game.initial.location = lookup_loc(game.system, toks[1], line);
            game.initial.counters = parse_vector(toks, 2, game.system.dimension, line);
            saw_init = true;
        } else if (dir == "objective") {
            if (!saw_dim) throw ParseError(line, toks[0].col, "'objective' before 'dim'");
            if (saw_obj) throw ParseError(line, toks[0].col, "duplicate 'objective' directive");
            if (toks.size() < 2)
                throw ParseError(line, toks[0].col, "usage: objective single|zeroset|axiszero ...");
            const std::string& kind = toks[1].text;
            if (kind == "single") {
                if (toks.size() < 3) throw ParseError(line, toks[0].col, "usage: objective single <loc> <counters...>");
                Configuration t;
                t.location = lookup_loc(game.system, toks[2], line);
                t.counters = parse_vector(toks, 3, game.system.dimension, line);
                game.objective = Objective::single(std::move(t));
            } else if (kind == "zeroset" || kind == "axiszero") {
                if (toks.size() < 3) throw ParseError(line, toks[0].col, "objective needs at least one location");
                std::vector<int> locs;
                for (size_t i = 2; i < toks.size(); ++i) locs.push_back(lookup_loc(game.system, toks[i], line));
                game.objective = kind == "zeroset" ? Objective::locations_at_zero(std::move(locs))
                                                   : Objective::axis_zero(std::move(locs));
            } else {
                throw ParseError(line, toks[1].col, "unknown objective kind '" + kind + "'");
            }
            saw_obj = true;
        } else {
            throw ParseError(line, toks[0].col, "unknown directive '" + dir + "'");
        }
    }

    if (!saw_header) throw ParseError(line + 1, 1, "missing 'crg-v1' header");
    if (!saw_dim) throw ParseError(line + 1, 1, "missing 'dim' directive");
    if (!saw_sem) throw ParseError(line + 1, 1, "missing 'semantics' directive");
    if (!saw_init) throw ParseError(line + 1, 1, "missing 'init' directive");
    if (!saw_obj) throw ParseError(line + 1, 1, "missing 'objective' directive");

    auto diags = validate(game);
    if (!diags.empty())
        throw ParseError(0, 0, "invalid instance: " + diags.front().code + " (" + diags.front().detail + ")");
    return game;
}

std::string serialize(const GameInstance& game) {
    std::ostringstream out;
    out << "crg-v1\n";
    out << "dim " << game.system.dimension << "\n";
    out << "semantics " << to_string(game.semantics) << "\n";
    for (const Location& loc : game.system.locations)
        out << "loc " << loc.name << ' ' << (loc.owner == Player::Reacher ? 'R' : 'O') << "\n";
    for (const Edge& e : game.system.edges) {
        out << "edge " << game.system.locations[e.src].name << ' ' << game.system.locations[e.dst].name;
        for (Counter c : e.label) out << ' ' << c;
        out << "\n";
    }
    out << "init " << game.system.locations[game.initial.location].name;
    for (Counter c : game.initial.counters) out << ' ' << c;
    out << "\n";
    out << "objective ";
    switch (game.objective.kind) {
        case Objective::Kind::SingleConfig:
            out << "single " << game.system.locations[game.objective.target.location].name;
            for (Counter c : game.objective.target.counters) out << ' ' << c;
            break;
        case Objective::Kind::LocationsAtZero:
        case Objective::Kind::AxisZero:
            out << (game.objective.kind == Objective::Kind::LocationsAtZero ? "zeroset" : "axiszero");
            for (int q : game.objective.location_set) out << ' ' << game.system.locations[q].name;
            break;
    }
    out << "\n";
    return out.str();
}

std::vector<Diagnostic> validate(const GenParams& p) {
    std::vector<Diagnostic> out;
    if (p.num_locations < 1) out.push_back({"bad-gen-locations", "num_locations must be >= 1"});
    if (p.dimension < 1) out.push_back({"bad-gen-dimension", "dimension must be >= 1"});
    if (p.label_bound < 0) out.push_back({"bad-gen-label-bound", "label_bound must be >= 0"});
    if (p.edges_min < 1 || p.edges_max < p.edges_min)
        out.push_back({"bad-gen-degree", "need 1 <= edges_min <= edges_max"});
    if (p.reacher_den < 1 || p.reacher_num < 0 || p.reacher_num > p.reacher_den)
        out.push_back({"bad-gen-fraction", "reacher fraction must be a rational in [0,1]"});
    if (p.objective_bound < 0 || p.init_bound < 0)
        out.push_back({"bad-gen-bound", "objective_bound and init_bound must be >= 0"});
    if (p.objective_kind == Objective::Kind::AxisZero && p.dimension != 2)
        out.push_back({"bad-gen-objective", "axiszero objective requires dimension 2"});
    return out;
}

GameInstance generate(const GenParams& p, std::uint64_t seed) {
    auto diags = validate(p);
    if (!diags.empty()) throw std::invalid_argument("generate: " + diags.front().code);

    std::mt19937_64 rng(mix_seed(seed, 0xc7a9e5));
    GameInstance game;
    game.semantics = p.semantics;
    game.system.dimension = p.dimension;

    for (int i = 0; i < p.num_locations; ++i) {
        Player owner = rng_below(rng, static_cast<std::uint64_t>(p.reacher_den)) <
                               static_cast<std::uint64_t>(p.reacher_num)
                           ? Player::Reacher
                           : Player::Opponent;
        game.system.locations.push_back({"q" + std::to_string(i), owner});
    }

    for (int src = 0; src < p.num_locations; ++src) {
        int degree = static_cast<int>(rng_range(rng, p.edges_min, p.edges_max));
        for (int k = 0; k < degree; ++k) {
            Edge e;
            e.src = src;
            e.dst = static_cast<int>(rng_below(rng, p.num_locations));
            for (int i = 0; i < p.dimension; ++i)
                e.label.push_back(rng_range(rng, -p.label_bound, p.label_bound));
            game.system.edges.push_back(std::move(e));
        }
    }

    game.initial.location = static_cast<int>(rng_below(rng, p.num_locations));
    for (int i = 0; i < p.dimension; ++i) {
        Counter lo = game.semantics == Semantics::Z ? -p.init_bound : 0;
        game.initial.counters.push_back(rng_range(rng, lo, p.init_bound));
    }

    switch (p.objective_kind) {
        case Objective::Kind::SingleConfig: {
            Configuration t;
            t.location = static_cast<int>(rng_below(rng, p.num_locations));
            for (int i = 0; i < p.dimension; ++i) t.counters.push_back(rng_range(rng, 0, p.objective_bound));
            if (p.force_reacher_objective) game.system.locations[t.location].owner = Player::Reacher;
            game.objective = Objective::single(std::move(t));
            break;
        }
        case Objective::Kind::LocationsAtZero:
        case Objective::Kind::AxisZero: {
            int size = static_cast<int>(rng_range(rng, 1, p.num_locations));
            std::vector<int> all(p.num_locations);
            for (int i = 0; i < p.num_locations; ++i) all[i] = i;
            // seeded partial Fisher-Yates for the first `size` entries
            for (int i = 0; i < size; ++i)
                std::swap(all[i], all[i + static_cast<int>(rng_below(rng, p.num_locations - i))]);
            all.resize(size);
            if (p.force_reacher_objective)
                for (int q : all) game.system.locations[q].owner = Player::Reacher;
            game.objective = p.objective_kind == Objective::Kind::LocationsAtZero
                                 ? Objective::locations_at_zero(std::move(all))
                                 : Objective::axis_zero(std::move(all));
            break;
        }
    }
    return game;
}

}  // namespace crg
