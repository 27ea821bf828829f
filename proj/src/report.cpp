#include "toric/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace toric {

std::string report_to_json(const Report& r, int indent) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["polytope"] = r.polytope;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["holds"] = r.holds;
  j["breakdown"] = nlohmann::json::object();
  for (const auto& [k, v] : r.breakdown) j["breakdown"][k] = to_string(v);
  j["generic_vectors"] = r.generic_vectors;
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse", std::string("report is not valid JSON: ") + e.what());
  }
  try {
    Report r;
    r.identity = j.at("identity").get<std::string>();
    r.polytope = j.at("polytope").get<std::string>();
    r.lhs = parse_rational(j.at("lhs").get<std::string>());
    r.rhs = parse_rational(j.at("rhs").get<std::string>());
    r.holds = j.at("holds").get<bool>();
    for (const auto& [k, v] : j.at("breakdown").items()) {
      r.breakdown[k] = parse_rational(v.get<std::string>());
    }
    r.generic_vectors = j.at("generic_vectors").get<std::vector<std::vector<std::int64_t>>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse", std::string("malformed report: ") + e.what());
  }
}

std::string report_to_table(const Report& r) {
  std::ostringstream out;
  out << r.identity << " [" << r.polytope << "]: " << (r.holds ? "HOLDS" : "FAILS") << "\n";
  out << "  lhs = " << to_string(r.lhs) << "\n";
  out << "  rhs = " << to_string(r.rhs) << "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : r.breakdown) width = std::max(width, k.size());
  for (const auto& [k, v] : r.breakdown) {
    out << "    " << std::left << std::setw(static_cast<int>(width)) << k << "  " << to_string(v) << "\n";
  }
  for (const auto& u : r.generic_vectors) {
    out << "  u = (";
    for (std::size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u[i];
    out << ")\n";
  }
  return out.str();
}

}  // namespace toric
