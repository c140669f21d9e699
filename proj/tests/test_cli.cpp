#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "jordan/catalog.hpp"
#include "jordan/cli.hpp"
#include "jordan/io.hpp"

using namespace jordan;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jordan-flow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("jordan_cli_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

// Fields whose values depend on floating-point details of the platform; only
// their type is compared.
bool is_volatile(const std::string& key) {
  static const std::set<std::string> keys = {"steps",  "terminal", "terminal_residual", "certificate_gap",
                                             "soliton_residual", "derivation_pairing", "jordan_defect"};
  return keys.count(key) > 0;
}

// Same keys and value types everywhere; numbers within tolerance.
void compare_json(const json& got, const json& want, const std::string& where) {
  INFO(where);
  const std::string key = where.substr(where.rfind('.') + 1);
  if (is_volatile(key)) {
    CHECK((got.is_number() == want.is_number() && got.is_object() == want.is_object()));
    return;
  }
  if (want.is_number()) {
    REQUIRE(got.is_number());
    CHECK(std::abs(got.get<double>() - want.get<double>()) < 1e-6 * std::max(1.0, std::abs(want.get<double>())));
    return;
  }
  REQUIRE(got.type() == want.type());
  if (want.is_object()) {
    REQUIRE(got.size() == want.size());
    for (auto it = want.begin(); it != want.end(); ++it) {
      REQUIRE(got.contains(it.key()));
      compare_json(got[it.key()], it.value(), where + "." + it.key());
    }
  } else if (want.is_array()) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) compare_json(got[i], want[i], where + "[" + std::to_string(i) + "]");
  } else {
    CHECK(got == want);
  }
}

void check_golden(const std::string& file, const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  std::ifstream in(std::string(JORDAN_GOLDEN_DIR) + "/" + file);
  REQUIRE(in);
  json want;
  in >> want;
  compare_json(json::parse(r.out), want, file);
}

}  // namespace

TEST_CASE("moment output for A_2_3") {
  const Run r = run({"moment", "--catalog", "A_2_3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("M = diag(-2, 1)") != std::string::npos);
  CHECK(r.out.find("E = 5\n") != std::string::npos);
  CHECK(r.out.find("seed 0") != std::string::npos);
}

TEST_CASE("validate rejects i > j with a format diagnostic") {
  const std::string path = temp_path("bad.json");
  write_file(path, R"({"dim": 2, "products": [{"i": 2, "j": 1, "k": 1, "re": 1.0, "im": 0.0}]})");
  const Run r = run({"validate", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("i <= j") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("validate exit codes") {
  CHECK(run({"validate", "--catalog", "A_4_63"}).code == 0);
  const std::string path = temp_path("nonjordan.json");
  write_file(path, R"({"dim": 2, "products": [{"i": 1, "j": 2, "k": 1, "re": 1.0},
                      {"i": 1, "j": 1, "k": 2, "re": 1.0}]})");
  CHECK(run({"validate", path}).code == 1);
  CHECK(run({"validate", temp_path("missing.json")}).code == 2);
  write_file(path, "{not json");
  CHECK(run({"validate", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("reproduce dim 3 passes all 19 rows") {
  const Run r = run({"reproduce", "--dim", "3"});
  CHECK(r.code == 0);
  std::size_t passes = 0;
  for (std::size_t p = r.out.find("| PASS |"); p != std::string::npos; p = r.out.find("| PASS |", p + 1)) ++passes;
  CHECK(passes == 19);
  const Run csv = run({"catalog", "reproduce", "--dim", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("name,dim,soliton", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  const Run r = run({"moment", "--bogus"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"moment"}).code == 2);
  CHECK(run({"moment", "--catalog", "A_9_9"}).code == 2);
  CHECK(run({"reproduce", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("export and load round-trip bit for bit") {
  for (const char* name : {"A_3_7", "A_4_16", "A_4_53"}) {
    const Run r = run({"catalog", "export", "--name", name});
    REQUIRE(r.code == 0);
    const std::string path = temp_path(std::string(name) + ".json");
    write_file(path, r.out);
    const StructureTensor back = load_tensor(path);
    CHECK(back.raw() == refined_tensor(builtin(name)).raw());
    std::remove(path.c_str());
  }
}

TEST_CASE("flow writes a trace and reports the seed") {
  const std::string path = temp_path("trace.csv");
  const Run r = run({"--seed", "5", "flow", "--catalog", "A_2_4", "--random-start", "--trace", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed 5") != std::string::npos);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "step,energy,grad_norm");
  std::remove(path.c_str());
  CHECK(run({"--max-steps", "2", "flow", "--catalog", "A_3_2", "--random-start"}).code == 1);
}

TEST_CASE("json output is schema stable") {
  check_golden("moment_A_2_3.json", {"--json", "moment", "--catalog", "A_2_3"});
  check_golden("stratify_A_3_7.json", {"--json", "stratify", "--catalog", "A_3_7"});
  check_golden("validate_A_1_1.json", {"--json", "validate", "--catalog", "A_1_1"});
  check_golden("flow_A_4_63.json", {"--json", "flow", "--catalog", "A_4_63"});
  check_golden("invariants_A_4_64.json", {"--json", "invariants", "--catalog", "A_4_64", "--match"});
  check_golden("export_A_3_7.json", {"catalog", "export", "--name", "A_3_7"});
}
