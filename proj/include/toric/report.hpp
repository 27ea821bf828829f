#pragma once

#include "toric/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toric {

// Outcome of checking one identity: both sides as exact rationals.
struct Report {
  std::string identity;
  std::string polytope;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::map<std::string, Rational> breakdown;
  std::vector<std::vector<std::int64_t>> generic_vectors;

  friend bool operator==(const Report&, const Report&) = default;
};

// {"identity", "polytope", "lhs", "rhs", "holds", "breakdown", "generic_vectors"}
// with rationals rendered as "p/q" strings. Keys are emitted sorted.
std::string report_to_json(const Report& r, int indent = 2);
Report report_from_json(const std::string& text);
std::string report_to_table(const Report& r);

}  // namespace toric
