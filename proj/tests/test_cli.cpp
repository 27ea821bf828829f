#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;
namespace fs = std::filesystem;

namespace {

const std::string corpus_dir = TORIC_CORPUS_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& name) { return corpus_dir + "/" + name + ".json"; }

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("toric_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("verify examples") {
  const Result pick = run({"verify", "pick", file("square")});
  CHECK(pick.code == 0);
  const Report r = report_from_json(pick.out);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.holds);

  const Result tet = run({"verify", "tetrahedron", file("simplex3")});
  CHECK(tet.code == 0);
  CHECK(report_from_json(tet.out).lhs == Rational(1, 2));

  const Result bad = run({"verify", "pick", corpus_dir + "/invalid/p112.json"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("(0,1)") != std::string::npos);
  CHECK(bad.err.find("-2") != std::string::npos);

  CHECK(run({"verify", "agw"}).code == 0);
  CHECK(run({"verify", "agw", file("square")}).code == 2);
  CHECK(run({"verify", "pick"}).code == 2);
  for (const char* kind : {"todd", "face-todd", "signature", "u-independence"}) {
    CHECK(run({"verify", kind, file("hirzebruch")}).code == 0);
  }
  CHECK(run({"verify", "tetrahedron", file("square")}).code == 2);
}

TEST_CASE("verify output formats") {
  const Result table = run({"verify", "pick", file("cp2"), "--format", "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("3/4") != std::string::npos);
  std::ostringstream out, err;
  CHECK(cli::run({"verify", "pick", file("cp2")}, out, err, true) == 0);
  CHECK(out.str() == table.out);
  CHECK(run({"verify", "pick", file("cp2"), "--format", "xml"}).code == 2);
  const Result with_u = run({"verify", "pick", file("cp2"), "--u", "1,5"});
  CHECK(with_u.code == 0);
  CHECK(report_from_json(with_u.out).generic_vectors.front() == std::vector<std::int64_t>{1, 5});
  const Result bad_u = run({"verify", "pick", file("cp2"), "--u", "1,1"});
  CHECK(bad_u.code != 0);
  CHECK(run({"verify", "pick", file("cp2"), "--u", "1,x"}).code == 2);
}

TEST_CASE("compute examples") {
  const auto value = [](const Result& r) { return nlohmann::json::parse(r.out).at("value").get<std::string>(); };
  const Result chern = run({"compute", "chern", file("cp2"), "--partition", "1,1"});
  CHECK(chern.code == 0);
  CHECK(value(chern) == "9");
  const Result gysin = run({"compute", "gysin", file("simplex3"), "--facet", "1", "--power", "3"});
  CHECK(gysin.code == 0);
  CHECK(value(gysin) == "1");
  const Result count = run({"compute", "count", file("square2"), "--faces"});
  CHECK(count.code == 0);
  CHECK(value(count) == "9");
  const auto j = nlohmann::json::parse(count.out);
  CHECK(j.at("quantity") == "count");
  CHECK(j.at("polytope") == "square2");
  CHECK(j.at("breakdown").size() > 2 * 3);
  CHECK(value(run({"compute", "hvector", file("cube3")})) == "0");
  CHECK(value(run({"compute", "volume", file("simplex3")})) == "1/6");
  CHECK(value(run({"compute", "signature-twisted", file("cp2")})) == "3/4");
  CHECK(value(run({"compute", "todd-twisted", file("cp2_3")})) == "10");
  const Result breakdown = run({"compute", "todd-twisted", file("cp2"), "--breakdown"});
  CHECK(nlohmann::json::parse(breakdown.out).at("breakdown").size() == 3);
}

TEST_CASE("compute input errors") {
  CHECK(run({"compute", "chern", file("cp2"), "--partition", "2,1"}).code == 2);
  CHECK(run({"compute", "chern", file("cp2"), "--partition", "1,0,1"}).code == 2);
  CHECK(run({"compute", "chern", file("cp2")}).code == 2);
  CHECK(run({"compute", "gysin", file("simplex3"), "--facet", "5", "--power", "3"}).code == 2);
  CHECK(run({"compute", "gysin", file("simplex3"), "--facet", "0", "--power", "3"}).code == 2);
  CHECK(run({"compute", "gysin", file("simplex3"), "--facet", "1", "--power", "2"}).code == 2);
  CHECK(run({"compute", "euler", file("cp2")}).code == 2);
  CHECK(run({"compute", "count", corpus_dir + "/missing.json"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed polytope files") {
  CHECK_THROWS_AS(cli::parse_polytope("{"), Error);
  CHECK_THROWS_AS(cli::parse_polytope("[]"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"name": "x", "dim": 2})"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"name": "x", "dim": 2, "facets": [{"normal": [1], "offset": 0}]})"), Error);
  CHECK_THROWS_AS(cli::parse_polytope(R"({"name": "x", "dim": 1, "facets": [{"normal": [1.5], "offset": 0}]})"),
                  Error);
  const HPolytope p = cli::load_polytope(file("prism"));
  CHECK(cli::parse_polytope(cli::polytope_to_json(p)) == p);
  CHECK(p.dim() == 3);
  CHECK(p.num_facets() == 5);
}

TEST_CASE("corpus command") {
  const Result all = run({"corpus", corpus_dir});
  CHECK(all.code == 0);
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j.size() == 14 * 5 + 2);
  for (const auto& entry : j) {
    CHECK(entry.at("holds") == true);
    const Report r = report_from_json(entry.dump());
    CHECK(r.lhs == r.rhs);
  }
  const Result table = run({"corpus", corpus_dir, "--format", "table"});
  CHECK(table.out.find("72/72 checks hold over 14 files") != std::string::npos);
  CHECK(run({"corpus", corpus_dir + "/missing"}).code == 2);
}

TEST_CASE("corpus with a translated copy still passes") {
  const fs::path dir = scratch_dir("translated");
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.path().extension() == ".json") fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  // cp2 shifted by (3, -2): offsets change by <t, normal>.
  write(dir / "cp2_shifted.json",
        R"({"name": "cp2_shifted", "dim": 2, "facets": [)"
        R"({"normal": [1, 0], "offset": 3}, {"normal": [0, 1], "offset": -2}, {"normal": [-1, -1], "offset": -2}]})");
  const Result r = run({"corpus", dir.string()});
  CHECK(r.code == 0);
  fs::remove_all(dir);
}

TEST_CASE("corpus with a non-Delzant file stops with its name") {
  const fs::path dir = scratch_dir("invalid");
  fs::copy_file(file("square"), dir / "a_square.json");
  fs::copy_file(corpus_dir + "/invalid/p112.json", dir / "b_p112.json");
  const Result r = run({"corpus", dir.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("b_p112.json") != std::string::npos);
  fs::remove_all(dir);
}
