#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binomdiv::cli {

// Parses args (program name excluded) against the subcommand grammar and
// executes. Exit codes: 0 = all checks passed / values emitted; 1 =
// counterexample or mismatch (structured report on `out`); 2 = usage or
// configuration error (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace binomdiv::cli
