#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bkw/families.hpp"
#include "bkw/io.hpp"

using namespace bkw;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bkw_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const std::string err_path = temp_path("stderr.txt");
  const std::string cmd = std::string(BKW_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, slurp(err_path)};
}

int line_count(const std::string& text) {
  int n = 0;
  for (const char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("zeros as CSV") {
  const Run r = run("zeros --family f --n 2..30");
  REQUIRE(r.status == 0);
  int expected = 0;
  for (int n = 2; n <= 30; ++n) expected += n + 1;
  CHECK(line_count(r.out) == expected + 1);
  CHECK(r.out.rfind("n,re,im,residual\n", 0) == 0);
}

TEST_CASE("zeros as JSON") {
  const Run r = run("zeros --family steele_cycle --n 3..3 --out json");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  std::vector<cplx> roots;
  for (const auto& z : j[0]["roots"]) roots.emplace_back(z[0].get<double>(), z[1].get<double>());
  REQUIRE(roots.size() == 3);
  CHECK(std::abs(roots[0] + 2.0) < 1e-12);
  CHECK(std::abs(roots[1] - 1.0) < 1e-5);
  CHECK(std::abs(roots[2] - 1.0) < 1e-5);
}

TEST_CASE("usage errors exit with 2") {
  const Run bad_family = run("zeros --family nope --n 2..3");
  CHECK(bad_family.status == 2);
  CHECK(bad_family.err.find("unknown family") != std::string::npos);
  CHECK(bad_family.out.empty());
  CHECK(run("zeros --family f --n 5..2").status == 2);
  CHECK(run("zeros --family f").status == 2);
  CHECK(run("limitset --family f --window 1,2,3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("steele --graph /nonexistent.json").status == 2);
  CHECK(run("plot --preset nope").status == 2);
}

TEST_CASE("computation failures exit with 1") {
  const Run r = run("zeros --family f --n 3..4 --tol 1e-300");
  CHECK(r.status == 1);
  CHECK(r.err.find("n=3") != std::string::npos);
}

TEST_CASE("recur prints the Steele recurrence") {
  const Run r = run("recur --family steele_cycle");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["order"] == 3);
  CHECK(poly_from_json(j["f"][0]) == ComplexPoly{-2.0, -1.0});
  CHECK(poly_from_json(j["f"][1]) == ComplexPoly{1.0, 2.0});
  CHECK(poly_from_json(j["f"][2]) == ComplexPoly{0.0, -1.0});
  CHECK(j["initials"].size() == 3);
}

TEST_CASE("graph commands") {
  const std::string c4 = temp_path("c4.json");
  std::ofstream(c4) << R"({"n_vertices": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})";
  const Run s = run("steele --graph " + c4);
  REQUIRE(s.status == 0);
  CHECK(json::parse(s.out)["coefficients"] == json::array({"3/1", "-4/1", "0/1", "0/1", "1/1"}));
  const Run t = run("tutte --graph " + c4 + " --out text");
  CHECK(t.status == 0);
  CHECK(t.out == "x^3 + x^2 + x + y\n");
  const Run m = run("mst-mean --graph " + c4);
  CHECK(m.status == 0);
  CHECK(m.out == "6/5\n");

  const std::string split = temp_path("split.json");
  std::ofstream(split) << R"({"n_vertices": 4, "edges": [[0,1],[2,3]]})";
  CHECK(run("tutte --graph " + split).status == 2);
}

TEST_CASE("verify passes for the independence family") {
  const Run r = run("verify --family independence --n 5..40");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["pass"] == true);
  CHECK(r.err.find("verify: PASS") != std::string::npos);
}

TEST_CASE("limit-set JSON written by one command is accepted by another") {
  const std::string ls_path = temp_path("ls.json");
  REQUIRE(run("limitset --family steele_cycle --grid 256 -o " + ls_path).status == 0);
  const LimitSet ls = limitset_from_json(read_json_file(ls_path));
  CHECK(ls.window.grid == 256);
  CHECK(ls.curves.size() == 1);
  const Run r = run("verify --family steele_cycle --n 10..30 --limitset " + ls_path);
  CHECK(r.status == 0);
}

TEST_CASE("family JSON export round-trips through the file loader") {
  const std::string path = temp_path("screl.json");
  REQUIRE(run("family --family screl -o " + path).status == 0);
  const Run from_file = run("zeros --family " + path + " --n 3..6");
  const Run builtin = run("zeros --family screl --n 3..6");
  REQUIRE(from_file.status == 0);
  CHECK(from_file.out == builtin.out);
}

TEST_CASE("plot output") {
  const Run g = run("plot --family g --n 2..30 --overlay");
  REQUIRE(g.status == 0);
  CHECK(g.out.find("<svg") != std::string::npos);
  CHECK(g.out.find("id=\"curves\"") != std::string::npos);
  CHECK(run("plot --family g --n 2..30 --overlay").out == g.out);

  const Run empty = run("plot --family steele_cycle --n 3..10 --window 20,21,20,21");
  REQUIRE(empty.status == 0);
  CHECK(empty.out.find("id=\"axes\"") != std::string::npos);

  const std::string path = temp_path("dom.svg");
  REQUIRE(run("plot --preset domination-curves -o " + path).status == 0);
  CHECK(slurp(path).find("</svg>") != std::string::npos);
}

TEST_CASE("thread count does not change output") {
  const Run one = run("zeros --family domination --n 2..25");
  const std::string cmd = "env BKW_THREADS=3 " + std::string(BKW_CLI_PATH) + " zeros --family domination --n 2..25";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  pclose(pipe);
  CHECK(out == one.out);
}
