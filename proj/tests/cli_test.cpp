#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramsey/census.hpp"
#include "ramsey/cli.hpp"
#include "ramsey/io.hpp"

using namespace ramsey;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ramsey_cli_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("construct piped into verify") {
  const Result gf = run({"construct", "--method", "gf16"});
  CHECK(gf.code == cli::kOk);
  CHECK(run({"verify", "--expect-mono", "0,0,0"}, gf.out).code == cli::kOk);
  CHECK(run({"verify"}, gf.out).code == cli::kOk);
  CHECK(run({"verify", "--expect-mono", "1,0,0"}, gf.out).code == cli::kVerificationFailed);

  const Result cyl = run({"construct", "--method", "cylinder"});
  CHECK(cyl.code == cli::kOk);
  const Result v = run({"verify", "--json"}, cyl.out);
  CHECK(v.code == cli::kOk);
  CHECK(json::parse(v.out)["verified"] == true);
}

TEST_CASE("verify reports failures with exit code 1") {
  const std::string k3 = serialize(EdgeColoring(3, Color::Blue));
  CHECK(run({"verify", "--expect-mono", "0,0,0"}, k3).code == cli::kVerificationFailed);
  CHECK(run({"verify", "--expect-mono", "1,0,0"}, k3).code == cli::kOk);

  const std::string path = temp_path("k3.json");
  write_file(path, k3);
  CHECK(run({"verify", path}).code == cli::kVerificationFailed);
  std::filesystem::remove(path);
}

TEST_CASE("twin-k17 piped into count") {
  const Result twin = run({"twin-k17", "--color", "R"});
  CHECK(twin.code == cli::kOk);
  const Result count = run({"count", "--per-color"}, twin.out);
  CHECK(count.code == cli::kOk);
  CHECK(count.out.find("(0,5,0)") != std::string::npos);

  const Result listed = run({"count", "--list", "--json"}, twin.out);
  const json j = json::parse(listed.out);
  CHECK(j["mono"]["R"] == 5);
  CHECK(j["mono_list"].size() == 5);
  CHECK(j["triangles"] == 680);

  const Result other = run({"twin-k17", "--color", "Y", "--delete-vertex", "7"});
  CHECK(run({"verify", "--expect-mono", "0,0,5"}, other.out).code == cli::kOk);
}

TEST_CASE("delete, extend, assemble, complete") {
  const std::string k16 = temp_path("k16.json");
  const std::string k15 = temp_path("k15.json");
  const std::string ext = temp_path("ext.txt");
  const std::string tmpl = temp_path("tmpl.json");
  REQUIRE(run({"construct", "--method", "gf16", "--out", k16}).code == cli::kOk);
  REQUIRE(run({"delete-vertex", k16, "--vertex", "0", "--out", k15}).code == cli::kOk);

  const Result exts = run({"extend", k15});
  CHECK(exts.code == cli::kOk);
  CHECK(exts.out == "BRRYYYRBYBRBRYB\n");  // class of w = 1..15
  write_file(ext, exts.out);
  const Result exts_json = run({"extend", k15, "--json"});
  CHECK(json::parse(exts_json.out)["total"] == 1);

  REQUIRE(run({"assemble", "--base", k15, "--ext-a", ext, "--ext-b", ext, "--out", tmpl}).code ==
          cli::kOk);
  for (const std::string c : {"B", "R", "Y"}) {
    const Result done = run({"complete", tmpl, "--color", c});
    CHECK(done.code == cli::kOk);
    const auto doc = parse(done.out);
    CHECK(census(doc.coloring).mono_total() == 5);
    CHECK(doc.meta["triangles_through_new_edge"] == 5);
  }
  CHECK(run({"complete", k15, "--color", "B"}).code == cli::kInvalidInput);
  CHECK(run({"complete", tmpl, "--color", "G"}).code == cli::kInvalidInput);

  write_file(ext, "BBBB\n");
  CHECK(run({"assemble", "--base", k15, "--ext-a", ext, "--ext-b", ext}).code == cli::kInvalidInput);

  for (const auto& p : {k16, k15, ext, tmpl}) std::filesystem::remove(p);
}

TEST_CASE("extend refuses hosts with monochromatic triangles") {
  CHECK(run({"extend"}, serialize(EdgeColoring(3, Color::Red))).code == cli::kInvalidInput);
}

TEST_CASE("search and exhaustive") {
  const Result s = run({"search", "--n", "6", "--k", "2", "--seed", "1", "--restarts", "5",
                        "--steps", "100", "--json"});
  CHECK(s.code == cli::kOk);
  const json j = json::parse(s.out);
  CHECK(j["best_count"] == 2);
  CHECK(j["trace"].size() == 5);

  const std::string best = temp_path("best.json");
  CHECK(run({"search", "--n", "16", "--k", "3", "--restarts", "200", "--out", best}).code == cli::kOk);
  std::ifstream f(best);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(census(parse(ss.str()).coloring).mono_total() == 0);
  std::filesystem::remove(best);

  const Result ex = run({"exhaustive", "--n", "6", "--k", "2"});
  CHECK(ex.code == cli::kOk);
  CHECK(ex.out.find("2 colors: 2") != std::string::npos);
  CHECK(json::parse(run({"exhaustive", "--n", "5", "--k", "2", "--json"}).out)["minimum"] == 0);
  CHECK(run({"exhaustive", "--n", "8", "--k", "3"}).code == cli::kCapacityExceeded);
  CHECK(run({"search", "--n", "70", "--k", "3"}).code == cli::kCapacityExceeded);
  CHECK(run({"search", "--n", "10", "--k", "5"}).code == cli::kInvalidInput);
}

TEST_CASE("exhaustive budget can be overridden from the environment") {
  ::setenv("RAMSEY_EXHAUSTIVE_BUDGET", "100", 1);
  CHECK(run({"exhaustive", "--n", "5", "--k", "2"}).code == cli::kCapacityExceeded);
  ::setenv("RAMSEY_EXHAUSTIVE_BUDGET", "2000", 1);
  CHECK(run({"exhaustive", "--n", "5", "--k", "2"}).code == cli::kOk);
  ::unsetenv("RAMSEY_EXHAUSTIVE_BUDGET");
}

TEST_CASE("export") {
  const std::string k3 = serialize(EdgeColoring(3, Color::Blue));
  const Result dot = run({"export", "--format", "dot"}, k3);
  CHECK(dot.code == cli::kOk);
  CHECK(dot.out.find("0 -- 1 [color=blue]") != std::string::npos);

  const Result twin = run({"twin-k17", "--color", "B"});
  const Result svg = run({"export", "--format", "svg", "--highlight"}, twin.out);
  CHECK(svg.code == cli::kOk);
  CHECK(svg.out.find("<svg") == 0);
}

TEST_CASE("exit codes for malformed input") {
  CHECK(run({}).code == cli::kInvalidInput);
  CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(run({"construct", "--method", "paley"}).code == cli::kInvalidInput);
  CHECK(run({"delete-vertex"}, serialize(EdgeColoring(3))).code == cli::kInvalidInput);
  CHECK(run({"delete-vertex", "--vertex", "9"}, serialize(EdgeColoring(3))).code == cli::kInvalidInput);
  CHECK(run({"verify"}, "{}").code == cli::kInvalidInput);
  CHECK(run({"verify"}, "garbage").code == cli::kInvalidInput);
  CHECK(run({"verify", "--expect-mono", "0,0"}, serialize(EdgeColoring(3))).code == cli::kInvalidInput);
  CHECK(run({"verify", "--expect-mono", "a,b,c"}, serialize(EdgeColoring(3))).code == cli::kInvalidInput);
  CHECK(run({"count", "/nonexistent/file.json"}).code == cli::kInvalidInput);
  CHECK(run({"twin-k17", "--color", "B", "--delete-vertex", "16"}).code == cli::kInvalidInput);
  CHECK(run({"--help"}).code == cli::kOk);
}
