#ifndef CRG_CLI_HPP
#define CRG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace crg {

// Dispatches the crg subcommands (solve, decide-nb0, transform, verify,
// gen, simulate, region-dump). Exit codes: 0 decided/success, 2 Unknown
// verdict, 3 verification disagreement, 1 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crg

#endif
