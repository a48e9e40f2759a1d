#pragma once

#include <iosfwd>

namespace polydiv {

/// Command-line entry point. Exit codes: 0 feasible/true, 2 infeasible/false,
/// 1 usage, parse or numerical error (message on err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace polydiv
