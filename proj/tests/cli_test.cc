#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>
#include <string>
#include <vector>

#include "ndcolor/coloring.h"
#include "ndcolor/dimacs.h"
#include "ndcolor/graph.h"

namespace ndcolor::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "ndcolor");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("ndcolor_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, ColorSevenCycle) {
  const std::string c7 = write("c7.col", write_dimacs(cycle_graph(7)));
  const Result r = run_cli({"color", c7});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.err, "");
  const Coloring c = parse_coloring(r.out);
  EXPECT_EQ(c.num_colors, 3);
  EXPECT_EQ(c.color.size(), 7u);
  EXPECT_EQ(r.out.substr(0, 4), "s 3\n");

  const std::string col = write("c7.sol", r.out);
  const Result v = run_cli({"verify", c7, col});
  EXPECT_EQ(v.code, kOk);
  EXPECT_EQ(v.out, "ok\n");
}

TEST_F(CliTest, NdOnCompleteGraph) {
  const Result r = run_cli({"nd", "-"}, write_dimacs(complete_graph(5)));
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "k 1\nclique 1 2 3 4 5\n");
}

TEST_F(CliTest, CheckClassOnFourCycleIsNotAnError) {
  const Result r = run_cli({"check-class", "-"}, write_dimacs(cycle_graph(4)));
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("c4-free no\n"), std::string::npos);
  EXPECT_NE(r.out.find("in-class no\n"), std::string::npos);
  EXPECT_NE(r.out.find("w C4 "), std::string::npos);
}

TEST_F(CliTest, CheckClassOnSevenCycle) {
  const Result r = run_cli({"check-class", "-"}, write_dimacs(cycle_graph(7)));
  EXPECT_EQ(r.out,
            "4k1-free yes\nc4-free yes\nc6-free yes\nhas-c7 yes\n"
            "in-class yes\nw C7 1 2 3 4 5 6 7\n");
}

TEST_F(CliTest, TypeGraphAndMis) {
  const Result t = run_cli({"typegraph", "-"}, write_dimacs(cycle_graph(7)));
  ASSERT_EQ(t.code, kOk);
  EXPECT_EQ(t.out.substr(0, 16), "t 7\nw 1 1 1 1 1 ");
  const Result m = run_cli({"mis", "-"}, t.out);
  ASSERT_EQ(m.code, kOk);
  std::istringstream lines(m.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    std::istringstream tokens(line);
    int v = 0;
    int size = 0;
    while (tokens >> v) ++size;
    EXPECT_EQ(size, 3);
  }
  EXPECT_EQ(count, 7);
  EXPECT_EQ(run_cli({"oracle", "mis", "-"}, t.out).out, m.out);
}

TEST_F(CliTest, ColorFromTypeGraph) {
  const Result r =
      run_cli({"color", "--from-typegraph", "-"}, "t 2\nw 3 4\nl 1\ne 1 2\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "s 4\nv 1 1\nv 2 2\nv 3 3\nv 4 4\nv 5 4\nv 6 4\nv 7 4\n");
}

TEST_F(CliTest, DumpIlp) {
  const Result r = run_cli({"color", "--from-typegraph", "--dump-ilp", "-"},
                           "t 2\nw 3 4\nl 1\ne 1 2\n");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "ilp 2 2\nrow 1 >= 3 : 1\nrow 2 >= 1 : 2\n");
  const std::string ilp = write("split.ilp", r.out);
  EXPECT_EQ(run_cli({"oracle", "ilp", ilp}).out, "opt 4\n");

  const std::string path = (dir_ / "out.ilp").string();
  const Result both = run_cli({"color", "--ilp-out", path, "-"},
                              write_dimacs(complete_graph(3)));
  EXPECT_EQ(both.code, kOk);
  EXPECT_EQ(both.out.substr(0, 4), "s 3\n");
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  EXPECT_EQ(text.str(), "ilp 1 1\nrow 1 >= 3 : 1\n");
}

TEST_F(CliTest, Oracles) {
  const std::string g = write("p.col", write_dimacs(petersen_graph()));
  EXPECT_EQ(run_cli({"oracle", "chi", g}).out, "chi 3\n");
  EXPECT_EQ(run_cli({"oracle", "nd", "-"}, write_dimacs(complete_graph(5))).out,
            "k 1\nclique 1 2 3 4 5\n");
  EXPECT_EQ(run_cli({"oracle", "bogus", g}).code, kDomainError);
  EXPECT_EQ(run_cli({"oracle", "chi", "-"}, write_dimacs(empty_graph(30))).code,
            kResourceLimit);
}

TEST_F(CliTest, VerifyFailures) {
  const std::string k2 = write("k2.col", write_dimacs(complete_graph(2)));
  const std::string same = write("same.sol", "s 1\nv 1 1\nv 2 1\n");
  const Result r = run_cli({"verify", k2, same});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_EQ(r.out, "fail edge 1 2\n");
  const std::string gap = write("gap.sol", "s 3\nv 1 1\nv 2 3\n");
  EXPECT_EQ(run_cli({"verify", k2, gap}).out, "fail unused-color 2\n");
  EXPECT_EQ(run_cli({"verify", k2, "-"}, "s 2\nv 1 1\nv 2 2\n").out, "ok\n");
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  const Result bad = run_cli({"color", "-"}, "p edge 2 1\ne 1 3\n");
  EXPECT_EQ(bad.code, kDomainError);
  EXPECT_EQ(bad.out, "");
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);

  EXPECT_EQ(run_cli({"frobnicate"}).code, kDomainError);
  EXPECT_EQ(run_cli({"color", "--no-such-flag", "-"}).code, kDomainError);
  EXPECT_EQ(run_cli({"color", (dir_ / "missing.col").string()}).code,
            kDomainError);
  EXPECT_EQ(run_cli({}).code, kDomainError);
}

TEST_F(CliTest, BudgetExceededExitsWithResourceCode) {
  const std::string c7 = write_dimacs(cycle_graph(7));
  // The root LP alone needs one node.
  const Result r = run_cli({"color", "--budget", "1", "-"}, c7);
  if (r.code != kOk) {
    EXPECT_EQ(r.code, kResourceLimit);
    EXPECT_EQ(r.out, "");
  }
  ::setenv("NDCOLOR_BUDGET", "1", 1);
  const Result env = run_cli({"color", "-"}, c7);
  EXPECT_EQ(env.code, r.code);
  ::setenv("NDCOLOR_BUDGET", "junk", 1);
  EXPECT_EQ(run_cli({"color", "-"}, c7).code, kDomainError);
  ::unsetenv("NDCOLOR_BUDGET");
  EXPECT_EQ(run_cli({"color", "-"}, c7).code, kOk);
}

TEST_F(CliTest, GenIsByteStable) {
  const std::vector<std::string> args = {"gen", "--kind", "blow_up_random",
                                         "--seed", "42"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(parse_dimacs(a.out));

  const std::string manifest = (dir_ / "manifest.txt").string();
  const std::string tg = (dir_ / "t.tg").string();
  const Result c = run_cli({"gen", "--kind", "paper_class_like", "--seed", "3",
                            "--n", "200", "--manifest", manifest,
                            "--typegraph-out", tg});
  ASSERT_EQ(c.code, kOk);
  std::ifstream in(manifest);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 19), "3 paper_class_like ");
  EXPECT_TRUE(fs::exists(tg));

  const Result g = run_cli({"gen", "--kind", "random_gnp", "--seed", "1",
                            "--n", "5", "--p", "1"});
  EXPECT_EQ(parse_dimacs(g.out), complete_graph(5));
  EXPECT_EQ(run_cli({"gen", "--kind", "nope", "--seed", "1"}).code,
            kDomainError);
}

TEST_F(CliTest, GeneratedGraphsColorAndVerify) {
  for (int seed = 0; seed < 10; ++seed) {
    const Result g = run_cli({"gen", "--kind", "blow_up_random", "--seed",
                              std::to_string(seed)});
    const std::string graph = write("g.col", g.out);
    const Result c = run_cli({"color", graph});
    ASSERT_EQ(c.code, kOk);
    EXPECT_EQ(run_cli({"verify", graph, "-"}, c.out).out, "ok\n");
  }
}

}  // namespace
}  // namespace ndcolor::cli
