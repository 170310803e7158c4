#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repdecomp {

/// Dispatch a command line. Exit codes: 0 = success / all assertions hold,
/// 1 = a verification suite found a counterexample, 2 = usage or size-cap
/// error. The REPDECOMP_SIZE_CAP environment variable overrides the default
/// character size cap; the --size-cap flag overrides both.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace repdecomp
