#include "cli.hpp"

#include "toric/agw.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace toric::cli {

namespace {

struct InputError : Error {
  explicit InputError(const std::string& what) : Error("input", what) {}
};

BigInt json_integer(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  throw InputError(where + " must be an integer");
}

struct Quantity {
  std::string quantity;
  std::string polytope;
  Rational value;
  std::map<std::string, Rational> breakdown;
  std::vector<std::vector<std::int64_t>> generic_vectors;
};

std::vector<std::int64_t> to_ints(const GenericVector& u) {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < u.u.size(); ++i) out.push_back(u.u(i).convert_to<std::int64_t>());
  return out;
}

std::string quantity_to_json(const Quantity& q) {
  nlohmann::json j;
  j["quantity"] = q.quantity;
  j["polytope"] = q.polytope;
  j["value"] = to_string(q.value);
  j["breakdown"] = nlohmann::json::object();
  for (const auto& [k, v] : q.breakdown) j["breakdown"][k] = to_string(v);
  j["generic_vectors"] = q.generic_vectors;
  return j.dump(2);
}

std::string quantity_to_table(const Quantity& q) {
  std::ostringstream out;
  out << q.quantity << " [" << q.polytope << "] = " << to_string(q.value) << "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : q.breakdown) width = std::max(width, k.size());
  for (const auto& [k, v] : q.breakdown) {
    out << "    " << std::left << std::setw(static_cast<int>(width)) << k << "  " << to_string(v) << "\n";
  }
  for (const auto& u : q.generic_vectors) {
    out << "  u = (";
    for (std::size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u[i];
    out << ")\n";
  }
  return out.str();
}

std::vector<long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what + " must be a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(what + " is empty");
  return out;
}

std::string face_key(const std::vector<int>& facets) {
  std::string s = "face{";
  for (std::size_t i = 0; i < facets.size(); ++i) s += (i ? "," : "") + std::to_string(facets[i]);
  return s + "}";
}

int exit_code_for(const Error& e) { return e.kind() == "internal" ? 1 : 2; }

struct Options {
  std::string kind;
  std::string file;
  std::string format;
  std::string u;
  std::string partition;
  int facet = 0;
  int power = 0;
  bool faces = false;
  bool breakdown = false;
};

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  if (!o.u.empty()) c.u = make_generic_vector(parse_int_list(o.u, "--u"));
  return c;
}

Report run_check(const std::string& kind, const HPolytope& p, const CheckOptions& c) {
  if (kind == "pick") return check_pick(p, c);
  if (kind == "todd") return check_todd(p, c);
  if (kind == "face-todd") return check_face_todd(p, c);
  if (kind == "signature") return check_untwisted_signature(p, c);
  if (kind == "tetrahedron") return check_tetrahedron(p);
  if (kind == "u-independence") return check_u_independence(p, c);
  throw InputError("unknown identity '" + kind + "'");
}

int cmd_verify(const Options& o, std::ostream& out) {
  Report r;
  if (o.kind == "agw") {
    if (!o.file.empty()) throw InputError("verify agw takes no polytope file");
    r = verify_agw();
  } else {
    if (o.file.empty()) throw InputError("verify " + o.kind + " needs a polytope file");
    r = run_check(o.kind, load_polytope(o.file), check_options(o));
  }
  out << (o.format == "json" ? report_to_json(r) + "\n" : report_to_table(r));
  return r.holds ? 0 : 1;
}

int cmd_compute(const Options& o, std::ostream& out) {
  const HPolytope p = load_polytope(o.file);
  Quantity q;
  q.quantity = o.kind;
  q.polytope = p.name();
  std::map<std::string, Rational> details;

  if (o.kind == "count" || o.kind == "hvector" || o.kind == "volume") {
    const auto charts = enumerate_vertices(p);
    const auto fl = face_lattice(p, charts);
    if (o.kind == "count") {
      const auto fc = count_points(p, charts, fl);
      q.value = fc.total();
      for (int k = 0; k <= p.dim(); ++k) {
        details["closed.dim" + std::to_string(k)] = fc.closed_in_dim(k);
        details["relint.dim" + std::to_string(k)] = fc.relint_in_dim(k);
      }
      if (o.faces) {
        for (const auto& f : fc.faces) {
          const std::string key = face_key(fl.face(f.face).facets);
          details[key + ".dim"] = f.dim;
          details[key + ".closed"] = f.closed;
          details[key + ".relint"] = f.relint;
        }
      }
    } else if (o.kind == "hvector") {
      const HVector h = h_vector(fl);
      q.value = signature_from_h(h);
      for (std::size_t i = 0; i < h.h.size(); ++i) details["h" + std::to_string(i)] = h.h[i];
      const auto f = fl.f_vector();
      for (std::size_t i = 0; i < f.size(); ++i) details["f" + std::to_string(i)] = f[i];
    } else {
      q.value = volume(p, charts, fl);
      details["simplices"] = static_cast<long>(fan_triangulation(fl, fl.top()).size());
    }
    q.breakdown = details;
    out << (o.format == "json" ? quantity_to_json(q) + "\n" : quantity_to_table(q));
    return 0;
  }

  const ToricManifold tm(p);
  const auto [u1, u2] = generic_pair(tm, check_options(o));
  q.generic_vectors = {to_ints(u1)};
  Integral integral;
  if (o.kind == "chern") {
    if (o.partition.empty()) throw InputError("compute chern needs --partition");
    const auto parts = parse_int_list(o.partition, "--partition");
    const Partition w = make_partition(std::vector<int>(parts.begin(), parts.end()));
    if (w.size() != tm.dim()) {
      throw InputError("partition sums to " + std::to_string(w.size()) + ", expected " +
                       std::to_string(tm.dim()));
    }
    const auto routes = chern_number_routes(tm, w, u1);
    q.value = chern_number(tm, w, u1);
    details["route.fixed_point"] = routes.fixed_point;
    details["route.elementary"] = routes.elementary;
    MultiPoly c = MultiPoly::constant(tm.num_facets(), tm.dim(), 1);
    for (int part : w.parts) c = c * elementary_symmetric(tm.num_facets(), tm.dim(), part);
    integral = integrate_poly_detailed(tm, c, u1);
  } else if (o.kind == "gysin") {
    if (o.facet < 1 || o.facet > tm.num_facets()) {
      throw InputError("--facet must be between 1 and " + std::to_string(tm.num_facets()));
    }
    if (o.power != tm.dim()) {
      throw InputError("--power must equal the dimension " + std::to_string(tm.dim()));
    }
    const int facet = o.facet - 1;
    q.value = gysin_power(tm, facet, o.power, u1);
    Exponent e(tm.num_facets(), 0);
    e[facet] = o.power;
    MultiPoly mono(tm.num_facets(), tm.dim());
    mono.add_term(e, 1);
    integral = integrate_poly_detailed(tm, mono, u1);
    details["route.monomial"] = integral.value;
    if (tm.dim() == 3) details["route.triple_product"] = gysin_power_triple_product(tm, facet, u1);
  } else if (o.kind == "signature-twisted" || o.kind == "todd-twisted") {
    const Genus g = o.kind == "todd-twisted" ? Genus::Todd : Genus::SignatureHalf;
    const MultiPoly f = exp_series_of_kahler(p) *
                        product_over_facets(genus_series(g, tm.dim()), tm.num_facets(), tm.dim());
    integral = integrate_poly_detailed(tm, f, u1);
    q.value = integral.value;
  } else {
    throw InputError("unknown quantity '" + o.kind + "'");
  }
  if (o.breakdown) {
    q.breakdown = details;
    for (std::size_t v = 0; v < integral.per_vertex.size(); ++v) {
      q.breakdown["vertex" + std::to_string(v)] = integral.per_vertex[v];
    }
  }
  out << (o.format == "json" ? quantity_to_json(q) + "\n" : quantity_to_table(q));
  return 0;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(o.file)) throw InputError("'" + o.file + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.file)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::string, Report>> results;
  for (const auto& path : files) {
    try {
      const HPolytope p = load_polytope(path.string());
      std::vector<std::string> kinds = {"pick", "todd", "face-todd", "signature", "u-independence"};
      if (p.dim() == 3 && p.num_facets() == 4) kinds.push_back("tetrahedron");
      for (const auto& kind : kinds) results.emplace_back(path.filename().string(), run_check(kind, p, {}));
    } catch (const Error& e) {
      err << "error: " << path.string() << ": " << e.what() << "\n";
      return exit_code_for(e);
    }
  }

  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second.holds; });
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [file, r] : results) {
      nlohmann::json entry = nlohmann::json::parse(report_to_json(r));
      entry["file"] = file;
      j.push_back(entry);
    }
    out << j.dump(2) << "\n";
  } else {
    std::size_t width = 4;
    for (const auto& [file, r] : results) width = std::max(width, file.size());
    out << std::left << std::setw(static_cast<int>(width)) << "file" << "  " << std::setw(15)
        << "identity" << "  " << std::setw(12) << "lhs" << "  " << std::setw(12) << "rhs"
        << "  verdict\n";
    for (const auto& [file, r] : results) {
      out << std::setw(static_cast<int>(width)) << file << "  " << std::setw(15) << r.identity << "  "
          << std::setw(12) << to_string(r.lhs) << "  " << std::setw(12) << to_string(r.rhs) << "  "
          << (r.holds ? "holds" : "FAILS") << "\n";
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.second.holds; });
    out << passed << "/" << results.size() << " checks hold over " << files.size() << " files\n";
  }
  return all ? 0 : 1;
}

}  // namespace

HPolytope parse_polytope(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("polytope file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("polytope file must be a JSON object");
  for (const char* key : {"name", "dim", "facets"}) {
    if (!j.contains(key)) throw InputError(std::string("polytope file lacks \"") + key + "\"");
  }
  if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
  const BigInt dim_big = json_integer(j["dim"], "\"dim\"");
  if (dim_big < 1 || dim_big > 16) throw InputError("\"dim\" must be between 1 and 16");
  const int dim = dim_big.convert_to<int>();
  const auto& facets = j["facets"];
  if (!facets.is_array() || facets.empty()) throw InputError("\"facets\" must be a nonempty array");
  IntMatrix normals(static_cast<Eigen::Index>(facets.size()), dim);
  IntVector offsets(static_cast<Eigen::Index>(facets.size()));
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "facet " + std::to_string(i);
    const auto& f = facets[i];
    if (!f.is_object() || !f.contains("normal") || !f.contains("offset")) {
      throw InputError(where + " must have \"normal\" and \"offset\"");
    }
    if (!f["normal"].is_array() || static_cast<int>(f["normal"].size()) != dim) {
      throw InputError(where + " normal must have length " + std::to_string(dim));
    }
    for (int c = 0; c < dim; ++c) normals(i, c) = json_integer(f["normal"][c], where + " normal");
    offsets(i) = json_integer(f["offset"], where + " offset");
  }
  return HPolytope(std::move(normals), std::move(offsets), j["name"].get<std::string>());
}

HPolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope(ss.str());
}

std::string polytope_to_json(const HPolytope& p) {
  nlohmann::json j;
  j["name"] = p.name();
  j["dim"] = p.dim();
  j["facets"] = nlohmann::json::array();
  for (int i = 0; i < p.num_facets(); ++i) {
    std::vector<std::int64_t> normal;
    for (int c = 0; c < p.dim(); ++c) normal.push_back(p.normals()(i, c).convert_to<std::int64_t>());
    j["facets"].push_back({{"normal", normal}, {"offset", p.offset(i).convert_to<std::int64_t>()}});
  }
  return j.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty) {
  CLI::App app{"Exact characteristic numbers of toric manifolds and lattice-point identities"};
  app.require_subcommand(1);
  Options o;
  o.format = tty ? "table" : "json";
  const std::vector<std::string> formats = {"json", "table"};

  auto* verify = app.add_subcommand("verify", "Check an identity; exit 0 holds, 1 fails, 2 invalid input");
  verify->add_option("kind", o.kind, "pick | todd | face-todd | tetrahedron | signature | u-independence | agw")
      ->required()
      ->check(CLI::IsMember({"pick", "todd", "face-todd", "tetrahedron", "signature", "u-independence", "agw"}));
  verify->add_option("file", o.file, "Polytope JSON file");
  verify->add_option("--format", o.format, "json or table")->check(CLI::IsMember(formats));
  verify->add_option("--u", o.u, "Override the generic vector, e.g. 1,3,9");

  auto* compute = app.add_subcommand("compute", "Compute one exact quantity");
  compute->add_option("kind", o.kind, "chern | count | hvector | volume | gysin | signature-twisted | todd-twisted")
      ->required()
      ->check(CLI::IsMember({"chern", "count", "hvector", "volume", "gysin", "signature-twisted", "todd-twisted"}));
  compute->add_option("file", o.file, "Polytope JSON file")->required();
  compute->add_option("--partition", o.partition, "Chern partition, e.g. 1,1");
  compute->add_option("--facet", o.facet, "Facet index, counted from 1");
  compute->add_option("--power", o.power, "Power of the facet class");
  compute->add_flag("--faces", o.faces, "Per-face lattice point table");
  compute->add_flag("--breakdown", o.breakdown, "Per-vertex localization contributions");
  compute->add_option("--format", o.format, "json or table")->check(CLI::IsMember(formats));
  compute->add_option("--u", o.u, "Override the generic vector, e.g. 1,3,9");

  auto* corpus = app.add_subcommand("corpus", "Run every check over a directory of polytope files");
  corpus->add_option("dir", o.file, "Directory of polytope JSON files")->required();
  corpus->add_option("--format", o.format, "json or table")->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (compute->parsed()) return cmd_compute(o, out);
    return cmd_corpus(o, out, err);
  } catch (const NotDelzantError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace toric::cli
