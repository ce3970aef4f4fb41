#include "orbispec/cli.hpp"
#include "orbispec/group_file.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <unistd.h>

using namespace orbispec;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Exported catalog files, written once per test binary.
const fs::path& files() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("orbispec_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    for (const char* e : {"flat1", "flat2", "flat3", "flat5", "so6_group"})
      REQUIRE(run({"catalog", "export", e, "--out", d.string()}).code == 0);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name) { return (files() / (name + ".json")).string(); }

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--group", file("flat1_g1")}).code == cli::kUsage);
  CHECK(run({"spectrum", "--group", file("flat1_g1"), "--k", "0", "--cutoff", "two"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--group", file("flat1_g1"), "--k", "0", "--cutoff", "-1"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--group", file("flat1_g1"), "--k", "0", "--cutoff", "1", "--format", "xml"}).code ==
        cli::kUsage);
  CHECK(run({"catalog", "run", "flat9"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kSuccess);
  auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(cli::kVersion) != std::string::npos);
}

TEST_CASE("parse and validation errors exit 2 and name the file") {
  auto r = run({"spectrum", "--group", "/nonexistent.json", "--k", "0", "--cutoff", "1"});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("/nonexistent.json") != std::string::npos);

  fs::path bad = files() / "bad.json";
  json j = json::parse(std::ifstream(file("flat1_g1")));
  j["gram"][0][0] = "four";
  std::ofstream(bad) << j.dump();
  r = run({"spectrum", "--group", bad.string(), "--k", "0", "--cutoff", "1"});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("bad.json") != std::string::npos);
  CHECK(r.err.find("gram[0][0]") != std::string::npos);

  r = run({"spectrum", "--group", file("flat1_g1"), "--k", "4", "--cutoff", "1"});
  CHECK(r.code == cli::kInvalidInput);

  r = run({"compare", "--a", file("flat1_g1"), "--b", file("so6_group_g1"), "--k", "0", "--cutoff", "1"});
  CHECK(r.code == cli::kInvalidInput);
}

TEST_CASE("compare") {
  auto eq = run({"compare", "--a", file("flat1_g1"), "--b", file("flat1_g2"), "--k", "0", "--cutoff", "25"});
  CHECK(eq.code == 0);
  CHECK(eq.out.rfind("Equal", 0) == 0);

  auto diff = run({"compare", "--a", file("flat1_g1"), "--b", file("flat1_g2"), "--k", "1", "--cutoff", "25"});
  CHECK(diff.code == cli::kNegativeResult);
  CHECK(diff.out.rfind("FirstDifference", 0) == 0);
  CHECK(diff.out.find("mu = 1: 5 vs 3") != std::string::npos);

  auto js = run({"compare", "--a", file("flat1_g1"), "--b", file("flat1_g2"), "--k", "1", "--cutoff", "25",
                 "--format", "json"});
  CHECK(js.code == cli::kNegativeResult);
  json r = json::parse(js.out);
  CHECK(r["command"] == "compare");
  CHECK(r["version"] == cli::kVersion);
  CHECK(r["results"]["equal"] == false);
  CHECK(r["results"]["first_difference"]["mu"] == "0");
  bool saw = false;
  for (const auto& d : r["results"]["differences"]) {
    CHECK(d["a"].get<int>() - d["b"].get<int>() >= 1);
    if (d["mu"] == "1") saw = d["a"] == 5 && d["b"] == 3;
  }
  CHECK(saw);
}

TEST_CASE("spectrum reports are deterministic and both formats carry the same numbers") {
  std::vector<std::string> args{"spectrum", "--group", file("flat5_g2"), "--k", "1", "--cutoff", "6"};
  auto table = run(args);
  CHECK(table.code == 0);
  CHECK(table.out.find("4π²·") != std::string::npos);
  args.insert(args.end(), {"--format", "json"});
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j.dump(2) + "\n" == a.out);

  std::vector<Rational> mus;
  std::regex row(R"(^(\S+)\s+\S+\s+(\d+)$)");
  std::istringstream lines(table.out);
  std::string line;
  std::vector<std::pair<std::string, long>> table_rows;
  while (std::getline(lines, line)) {
    std::smatch m;
    if (std::regex_match(line, m, row) && m[1] != "mu") table_rows.emplace_back(m[1], std::stol(m[2]));
  }
  const auto& entries = j["results"]["entries"];
  REQUIRE(entries.size() == table_rows.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(entries[i]["mu"] == table_rows[i].first);
    CHECK(entries[i]["multiplicity"] == table_rows[i].second);
    mus.push_back(parse_rational(entries[i]["mu"].get<std::string>()));
  }
  CHECK(std::is_sorted(mus.begin(), mus.end()));
}

TEST_CASE("isotropy and strata") {
  auto iso = run({"isotropy", "--group", file("flat2_g2"), "--format", "json"});
  CHECK(iso.code == 0);
  json j = json::parse(iso.out);
  CHECK(j["results"]["max_order"] == 4);
  CHECK(j["results"]["types"] == json::array({"Z2xZ2"}));
  CHECK(j["results"]["max_stratum_dim"] == 0);

  auto strata = run({"strata", "--group", file("flat2_g2")});
  CHECK(strata.code == 0);
  CHECK(strata.out.find("8 x Point  isotropy Z2xZ2") != std::string::npos);
  CHECK(strata.out.find("12 x OpenSegment  isotropy Z_2  length 1") != std::string::npos);

  auto f3 = run({"strata", "--group", file("flat3_g2")});
  CHECK(f3.out.find("length 1/√2 (squared 1/2)") != std::string::npos);

  auto sphere = run({"strata", "--group", file("so6_group_g1")});
  CHECK(sphere.out.find("RP^2") != std::string::npos);
}

TEST_CASE("almost-conjugate") {
  auto ok = run({"almost-conjugate", "--a", file("flat3_g1"), "--b", file("flat3_g2"), "--ambient",
                 file("flat3_ambient")});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("almost conjugate", 0) == 0);

  auto so = run({"almost-conjugate", "--a", file("so6_group_g1"), "--b", file("so6_group_g2"), "--ambient",
                 "orthogonal", "--format", "json"});
  CHECK(so.code == 0);
  json j = json::parse(so.out);
  CHECK(j["results"]["almost_conjugate"] == true);
  CHECK(j["results"]["special_orthogonal_certified"] == true);
  CHECK(j["results"]["bijection"].size() == 8);

  CHECK(run({"almost-conjugate", "--a", file("flat3_g1"), "--b", file("flat3_g2")}).code == cli::kUsage);
  CHECK(run({"almost-conjugate", "--a", file("flat3_g1"), "--b", file("so6_group_g2")}).code == cli::kInvalidInput);
  // flat1's groups are not almost conjugate in their own quotient group.
  auto no = run({"almost-conjugate", "--a", file("flat1_g1"), "--b", file("flat1_g2"), "--ambient",
                 file("flat1_g1")});
  CHECK(no.code == cli::kInvalidInput);

  // Inside an abelian ambient group classes are singletons, so different
  // groups are never almost conjugate.
  json elems = json::array();
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    json m = json::array();
    for (int i = 0; i < 6; ++i) {
      json row = json::array();
      for (int k = 0; k < 6; ++k) row.push_back(i != k ? "0" : (mask >> i & 1) ? "-1" : "1");
      m.push_back(row);
    }
    elems.push_back(m);
  }
  fs::path amb = files() / "diag.json";
  std::ofstream(amb) << json{{"kind", "orthogonal"}, {"dim", 6}, {"elements", elems}}.dump();
  auto refuted = run({"almost-conjugate", "--a", file("so6_group_g1"), "--b", file("so6_group_g2"), "--ambient",
                      amb.string()});
  CHECK(refuted.code == cli::kNegativeResult);
  CHECK(refuted.out.rfind("not almost conjugate", 0) == 0);
}

TEST_CASE("catalog commands") {
  auto list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 8);

  auto one = run({"catalog", "run", "flat1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("PASS flat1") != std::string::npos);
  CHECK(one.out.find("FAIL") == std::string::npos);

  auto js = run({"catalog", "run", "so6_sphere", "--format", "json"});
  json j = json::parse(js.out);
  CHECK(j["results"]["failed"] == 0);
  CHECK(j["results"]["total"].get<int>() > 0);
}

TEST_CASE("exported files parse back to the catalog groups") {
  auto f = io::load_group_file(file("flat5_g2"));
  REQUIRE(f.is_crystal());
  CHECK(std::get<CrystalGroup>(f.group).reps == catalog::get("flat5").flat().g2.reps);
  auto s = io::load_group_file(file("flat3_g1"));
  CHECK(s.sublattice == catalog::flat3_sublattice());
}
