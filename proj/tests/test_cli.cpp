#include <sstream>
#include <string>

#include "cli_support.hpp"
#include "doctest.h"
#include "jpm/cli.hpp"
#include "jpm/string_index.hpp"
#include "jpm/tree_index.hpp"

using namespace jpm;
using namespace jpm::cli;
using clitest::run;
using clitest::TempDir;

namespace {

std::pair<std::size_t, std::size_t> parse_error_at(std::string_view text, InputKind kind) {
  try {
    parse_input(text, kind);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

// Backend that reports one extra 1 for the largest size.
BackendRegistry with_mutant() {
  auto registry = BackendRegistry::defaults();
  Backend mutant = *registry.find("blocked");
  const auto inner = mutant.build;
  mutant.build = [inner](const Input& input, const BuildParams& params) -> BuildResult {
    auto result = std::get<Profile>(inner(input, params));
    std::vector<Cost> lo(result.min_values().begin(), result.min_values().end());
    std::vector<Cost> hi(result.max_values().begin(), result.max_values().end());
    hi.back() += 1;
    return Profile(lo, hi);
  };
  registry.add("mutant", mutant);
  return registry;
}

}  // namespace

TEST_CASE("input kinds round trip through their names") {
  for (auto kind : {InputKind::string, InputKind::tree, InputKind::weighted_string, InputKind::weighted_tree}) {
    CHECK(parse_kind(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_kind("graph").has_value());
}

TEST_CASE("parse errors carry line and character") {
  CHECK(parse_error_at("01a1\n", InputKind::string) == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(parse_error_at("", InputKind::string).first == 1);
  CHECK(parse_error_at("\n\n", InputKind::string).first >= 1);
  CHECK(parse_error_at("3\n0 1\n1 0\n1 x\n", InputKind::tree).first == 4);
  CHECK(parse_error_at("2\n0 1\n0 1\n", InputKind::tree).first != 0);
  CHECK(parse_error_at("3\n0 1\n1 1\n", InputKind::tree).first != 0);
  CHECK(parse_error_at("2\n0 1\n1 2\n", InputKind::tree).first == 3);
  CHECK(parse_error_at("3 -2 x\n", InputKind::weighted_string) == std::pair<std::size_t, std::size_t>{1, 6});
}

TEST_CASE("format and parse are inverse") {
  for (auto kind : {InputKind::string, InputKind::tree, InputKind::weighted_string, InputKind::weighted_tree}) {
    const auto input = generate_input(kind, 37, 5);
    const auto text = format_input(input);
    CHECK(format_input(parse_input(text, kind)) == text);
  }
}

TEST_CASE("gen is deterministic per seed") {
  const auto a = run({"gen", "--kind", "tree", "--n", "50", "--seed", "9"});
  const auto b = run({"gen", "--kind", "tree", "--n", "50", "--seed", "9"});
  const auto c = run({"gen", "--kind", "tree", "--n", "50", "--seed", "10"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("build writes the profile CSV") {
  TempDir dir;
  const auto input = dir.write("t.txt", "0110\n");
  const auto naive = run({"build", "--input", input, "--kind", "string", "--algo", "naive"});
  const auto blocked = run({"build", "--input", input, "--kind", "string", "--algo", "blocked"});
  CHECK(naive.code == 0);
  CHECK(naive.out == "size,min_ones,max_ones\n1,0,1\n2,1,2\n3,2,2\n4,2,2\n");
  CHECK(blocked.out == naive.out);
  CHECK(run({"build", "--input", input}).out == naive.out);

  const auto weighted = dir.write("w.txt", "2 -1 3\n");
  const auto w = run({"build", "--input", weighted, "--kind", "weighted-string"});
  CHECK(w.code == 0);
  CHECK(w.out == "size,max_sum\n1,3\n2,2\n3,4\n");
}

TEST_CASE("build failures exit with status 2") {
  TempDir dir;
  const auto empty = dir.write("empty.txt", "");
  const auto r = run({"build", "--input", empty, "--kind", "string"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);
  CHECK(run({"build", "--input", dir.file("missing.txt")}).code == 2);
  const auto ok = dir.write("ok.txt", "01\n");
  CHECK(run({"build", "--input", ok, "--algo", "micro-macro"}).code == 2);
  CHECK(run({"build", "--input", ok, "--algo", "nope"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("query answers from a stored profile") {
  TempDir dir;
  const auto input = dir.write("t.txt", "0110\n");
  REQUIRE(run({"build", "--input", input, "--out", dir.file("p.csv")}).code == 0);
  const auto profile = dir.file("p.csv");
  CHECK(run({"query", "--profile", profile, "-i", "2", "-j", "1"}).out == "yes\n");
  CHECK(run({"query", "--profile", profile, "-i", "2", "-j", "0"}).out == "no\n");
  CHECK(run({"query", "--profile", profile, "-i", "5", "-j", "2"}).out == "no\n");
  CHECK(run({"query", "--profile", profile, "-i", "0", "-j", "0"}).out == "no\n");
  dir.write("bad.csv", "size,min_ones,max_ones\n1,0\n");
  const auto bad = run({"query", "--profile", dir.file("bad.csv"), "-i", "1", "-j", "0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("tree round trip matches the library") {
  TempDir dir;
  REQUIRE(run({"gen", "--kind", "tree", "--n", "120", "--seed", "4", "--out", dir.file("t.txt")}).code == 0);
  REQUIRE(run({"build", "--input", dir.file("t.txt"), "--kind", "tree", "--out", dir.file("p.csv")}).code == 0);
  const auto input = parse_input(dir.read("t.txt"), InputKind::tree);
  const auto expected = simple_tree_profile(binarize(std::get<LabeledTree>(input.data)));
  CHECK(parse_profile_csv(dir.read("p.csv")) == expected);
  CHECK(run({"build", "--input", dir.file("t.txt"), "--kind", "tree", "--algo", "simple-tree"}).out ==
        dir.read("p.csv"));
}

TEST_CASE("verify passes for correct backends") {
  const auto r = run({"verify", "--algo", "blocked", "--oracle", "naive", "--max-n", "80", "--seeds", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 mismatches") != std::string::npos);
  CHECK(run({"verify", "--algo", "micro-macro", "--oracle", "enumerate", "--kind", "tree", "--max-n", "14",
             "--seeds", "20"})
            .code == 0);
  CHECK(run({"verify", "--algo", "simple-tree", "--oracle", "enumerate", "--kind", "weighted-tree",
             "--max-n", "12", "--seeds", "20"})
            .code == 0);
  CHECK(run({"verify", "--algo", "recursive", "--oracle", "naive", "--kind", "weighted-string",
             "--max-n", "100", "--seeds", "20"})
            .code == 0);
  CHECK(run({"verify", "--algo", "micro-macro", "--oracle", "enumerate", "--kind", "tree", "--max-n", "40"})
            .code == 2);
}

TEST_CASE("verify catches a broken backend") {
  const auto registry = with_mutant();
  const auto r = run({"verify", "--algo", "mutant", "--oracle", "naive", "--max-n", "30", "--seeds", "5"}, registry);
  CHECK(r.code == 1);
  CHECK(r.out.find("mismatch") != std::string::npos);
  CHECK(r.out.find("input:") != std::string::npos);
}

TEST_CASE("bench emits the documented schema") {
  const auto r = run({"bench", "--kinds", "string", "--algos", "naive,blocked", "--sizes", "50,100,200"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kind,backend,n,param,build_ms,peak_memory_bytes");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
  }
  CHECK(rows == 6);
  const auto skipped = run({"bench", "--kinds", "tree", "--algos", "blocked,simple-tree", "--sizes", "30"});
  CHECK(skipped.code == 0);
  CHECK(skipped.err.find("skipping blocked") != std::string::npos);
}
