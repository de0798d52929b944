#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(LEAKTIGHT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(LEAKTIGHT_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("leaktight_cli_" + name); }

}  // namespace

TEST(Cli, Value1Verdicts) {
  CliRun loop = run("value1 " + fixture("two_state_loop.aut"));
  EXPECT_EQ(loop.code, 0);
  EXPECT_EQ(loop.out, "VALUE1_TRUE witness=iter(a)\n");

  CliRun f1 = run("value1 " + fixture("fig1_x3-4.aut"));
  EXPECT_EQ(f1.code, 0);
  EXPECT_EQ(f1.out.rfind("NOT_LEAKTIGHT leak=(r=0,q=L2) witness=", 0), 0u);

  CliRun sink = run("value1 " + fixture("rejecting_sink.aut"));
  EXPECT_EQ(sink.out, "VALUE1_FALSE_LEAKTIGHT\n");
}

TEST(Cli, ProbeTable) {
  CliRun r = run("value1 " + fixture("two_state_loop.aut") + " --probe --n-max 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n,word_length,acceptance,mode\n1,1,0.5,exact\n"), std::string::npos);
  EXPECT_NE(r.out.find("5,5,0.96875,exact\n"), std::string::npos);
}

TEST(Cli, LeaktightAndHierarchical) {
  EXPECT_EQ(run("leaktight " + fixture("two_state_loop.aut")).out, "LEAKTIGHT\n");
  CliRun f2 = run("leaktight " + fixture("fig2.aut"));
  EXPECT_EQ(f2.out.rfind("NOT_LEAKTIGHT leak=", 0), 0u);
  EXPECT_EQ(run("hierarchical " + fixture("chain4.aut")).out,
            "HIERARCHICAL rank q0:0 q1:1 q2:2 q3:3\n");
  EXPECT_EQ(run("hierarchical " + fixture("fig2.aut")).out, "NOT_HIERARCHICAL\n");
}

TEST(Cli, Eval) {
  CliRun w = run("eval " + fixture("fig1_x3-4.aut") + " --word bab");
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out, "3/8\n");
  CliRun f = run("eval " + fixture("fig1_x3-4.aut") + " --family '(b a^n)^(2^n) b' --n 1 --n 2");
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(std::count(f.out.begin(), f.out.end(), '\n'), 3);
  CliRun range = run("eval " + fixture("fig1_x3-4.aut") + " --family 'b a^n b' --n-from 1 --n-to 4");
  EXPECT_EQ(std::count(range.out.begin(), range.out.end(), '\n'), 5);
}

TEST(Cli, MonoidAndDot) {
  CliRun m = run("monoid " + fixture("two_state_loop.aut"));
  EXPECT_EQ(m.out.substr(0, m.out.find('\n')), "elements 3 markov 3 max_sharp_height 1 rounds " +
                                                    m.out.substr(m.out.find("rounds ") + 7,
                                                                 m.out.find('\n') - m.out.find("rounds ") - 7));
  EXPECT_NE(m.out.find("u=01/01 u+=11/01 iter(a)"), std::string::npos);
  fs::path dir = temp("dot");
  fs::remove_all(dir);
  EXPECT_EQ(run("monoid " + fixture("fig2.aut") + " --dot " + dir.string()).code, 0);
  EXPECT_TRUE(fs::exists(dir / "manifest.txt"));
  EXPECT_TRUE(fs::exists(dir / "element_31.dot"));
  fs::remove_all(dir);
}

TEST(Cli, Compose) {
  fs::path out = temp("compose.aut");
  CliRun r = run("compose " + fixture("fig2.aut") + " " + fixture("fig2.aut") + " --parallel -o " +
              out.string());
  EXPECT_EQ(r.code, 0);
  std::string text = slurp(out);
  EXPECT_NE(text.find("states A.0 A.L1 A.L2 B.0 B.L1 B.L2"), std::string::npos);
  EXPECT_EQ(run("leaktight " + out.string()).out.rfind("NOT_LEAKTIGHT", 0), 0u);
  CliRun prod = run("compose " + fixture("fig2.aut") + " " + fixture("two_state_loop.aut") + " --product");
  EXPECT_EQ(prod.code, 2);
  CliRun ok = run("compose " + fixture("fig2.aut") + " " + fixture("chain4.aut") + " --product");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("states (0,q0) (0,q1)"), std::string::npos);
  fs::remove(out);
}

TEST(Cli, Parity) {
  EXPECT_EQ(run("parity " + fixture("parity_all_even.aut")).out.rfind("true R={", 0), 0u);
  EXPECT_EQ(run("parity " + fixture("parity_all_odd.aut")).out, "false\n");
  EXPECT_EQ(run("parity " + fixture("parity_two_state.aut")).out, "true R={f}\n");
  EXPECT_EQ(run("parity " + fixture("two_state_loop.aut")).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("value1 /nonexistent.aut").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("eval " + fixture("fig2.aut") + " --word xyz").code, 2);
  EXPECT_EQ(run("value1 " + fixture("fig2.aut") + " --budget 5").code, 3);
  EXPECT_EQ(run("eval " + fixture("fig1_x3-4.aut") + " --family '(b a^n)^(2^n) b' --n 40").code, 3);
  fs::path bad = temp("bad.aut");
  std::ofstream(bad) << "automaton x\nalphabet a\nstates p\ninitial p\ntrans p a p:1/2\n";
  EXPECT_EQ(run("value1 " + bad.string()).code, 2);
  fs::remove(bad);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ReportsAreDeterministicAndVerifiable) {
  fs::path a = temp("r1.json");
  fs::path b = temp("r2.json");
  for (const char* f : {"fig1_x3-4.aut", "fig2.aut", "two_state_loop.aut", "chain4.aut"}) {
    CliRun r1 = run("value1 " + fixture(f) + " --report " + a.string());
    CliRun r2 = run("value1 " + fixture(f) + " --report " + b.string());
    EXPECT_EQ(r1.out, r2.out) << f;
    std::string t1 = slurp(a);
    EXPECT_EQ(t1, slurp(b)) << f;
    auto doc = nlohmann::json::parse(t1);
    EXPECT_EQ(r1.out.substr(0, r1.out.find_first_of(" \n")), doc["outcome"].get<std::string>());
  }
  CliRun p = run("parity " + fixture("parity_two_state.aut") + " --report " + a.string());
  EXPECT_EQ(nlohmann::json::parse(slurp(a))["overall"], "true");
  fs::remove(a);
  fs::remove(b);
}
