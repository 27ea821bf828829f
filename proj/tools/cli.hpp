#pragma once

#include "toric/invariants.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

// {"name": str, "dim": int, "facets": [{"normal": [int...], "offset": int}...]}
HPolytope parse_polytope(const std::string& json_text);
HPolytope load_polytope(const std::string& path);
std::string polytope_to_json(const HPolytope& p);

// Runs the command line; returns the process exit code (0 holds/ok,
// 1 identity fails, 2 invalid input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty = false);

}  // namespace toric::cli
