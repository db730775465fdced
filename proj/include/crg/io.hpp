#ifndef CRG_IO_HPP
#define CRG_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "crg/game.hpp"

namespace crg {

// Error from parse(): position plus message, already formatted into what().
struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line(line),
          col(col),
          message(message) {}

    int line;
    int col;
    std::string message;
};

// crg-v1 text format, one directive per line, '#' starts a comment:
//   crg-v1
//   dim <d>
//   semantics z|vass|nbvass
//   loc <name> R|O            (one per location)
//   edge <src> <dst> <i1> ... <id>
//   init <loc> <i1> ... <id>
//   objective single <loc> <i1> ... <id>
//   objective zeroset <loc>...
//   objective axiszero <loc>...
GameInstance parse(const std::string& text);

// Canonical serialization: fixed directive order, single spaces, '\n' line
// endings, declaration order preserved. Byte-for-byte deterministic and
// injective on valid instances; parse(serialize(g)) == g.
std::string serialize(const GameInstance& game);

struct GenParams {
    int num_locations = 3;
    int dimension = 1;
    Counter label_bound = 1;        // components drawn from [-label_bound, label_bound]
    int edges_min = 1;              // per-location out-degree bounds, edges_min >= 1
    int edges_max = 2;
    Semantics semantics = Semantics::Z;
    Objective::Kind objective_kind = Objective::Kind::SingleConfig;
    int reacher_num = 1;            // P(owner = Reacher) = reacher_num / reacher_den
    int reacher_den = 2;
    Counter objective_bound = 1;    // objective counters drawn from [0, objective_bound]
    Counter init_bound = 2;         // initial counters: [0, b] (Vass/NB) or [-b, b] (Z)
    bool force_reacher_objective = false;  // pin objective location(s) Reacher-owned
};

std::vector<Diagnostic> validate(const GenParams& params);

// Deterministic function of (params, seed). Every location gets >= 1
// outgoing edge, so Z/NB instances never deadlock; the generated instance
// always passes validate().
GameInstance generate(const GenParams& params, std::uint64_t seed);

}  // namespace crg

#endif
