#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(FORESTBOUND_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string sample(const std::string& name) { return std::string(FORESTBOUND_SAMPLES) + "/" + name; }

}  // namespace

TEST(Cli, CountForests) {
  const auto r = run("count forests " + sample("k3.graph"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "7\n");
  EXPECT_EQ(run("count trees " + sample("petersen.graph")).out, "2000\n");
  EXPECT_EQ(run("count r-at-2 " + sample("k3.graph")).out, "9\n");
  EXPECT_EQ(run("count forests " + sample("double_edge.graph")).out, "3\n");
}

TEST(Cli, Polynomials) {
  const auto r = run("poly forest " + sample("k3.graph"));
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"], nlohmann::json({"0", "3", "3", "1"}));
  EXPECT_EQ(nlohmann::json::parse(run("poly matching " + sample("k3.graph")).out)["coefficients"],
            nlohmann::json({"0", "-3", "0", "1"}));
  EXPECT_EQ(nlohmann::json::parse(run("poly pseudoforest " + sample("k3.graph")).out)["coefficients"],
            nlohmann::json({"2", "3", "3", "1"}));
}

TEST(Cli, Generate) {
  const auto r = run("gen glued 3 5");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["num_vertices"], 11);
  EXPECT_EQ(j["edges"].size(), 15u);
  EXPECT_EQ(run("gen random-regular 4 10 --seed 1").out, run("gen random-regular 4 10 --seed 1").out);
  const auto lift = nlohmann::json::parse(run("gen lift " + sample("c3.graph") + " " + sample("c3_minus.sign")).out);
  EXPECT_EQ(lift["num_vertices"], 6);
  EXPECT_EQ(run("gen random-regular 3 5").status, 2);
}

TEST(Cli, Table) {
  const auto r = run("table1 --d-min 4 --d-max 20 --digits 15 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("d,conjecture,matching_bound,d_minus_half_inv\n"), std::string::npos);
  EXPECT_NE(r.out.find("4,3.85714285714286,3.91947904192452,3.87500000000000\n"), std::string::npos);
  EXPECT_NE(r.out.find("9,8.94023598867791,8.94392512794576,8.94444444444444\n"), std::string::npos);
  const auto j = nlohmann::json::parse(run("table1 --d-min 5 --d-max 6 --format json").out);
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["matching_bound"], "5.92330714974640");
  EXPECT_EQ(j[0]["s_integer"], "14136");
}

TEST(Cli, Constants) {
  const auto j = nlohmann::json::parse(run("constants --d 4 --digits 10").out);
  EXPECT_EQ(j["conjecture"], "3.857142857");
  EXPECT_EQ(j["mckay_tree"], "3.375000000");
  EXPECT_EQ(j["s_integer"], "925");
}

TEST(Cli, Inequality) {
  const auto r = run("inequality --n-min 5 --n-max 73");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["passed"], 69);
  EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Cli, Verify) {
  const auto r = run("verify correlation");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["suite"], "correlation");
  EXPECT_EQ(run("verify godsil --samples 2 --seed 5").status, 0);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("count forests --bogus " + sample("k3.graph")).status, 2);
  EXPECT_EQ(run("count forests /nonexistent.graph").status, 2);
  EXPECT_EQ(run("count widgets " + sample("k3.graph")).status, 2);
  EXPECT_EQ(run("verify nope").status, 2);
  EXPECT_EQ(run("table1 --format xml").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, ResourceGuard) {
  // K_9 has 36 edges, over the subset-enumeration cap used by pseudoforest.
  EXPECT_EQ(run("gen complete 9 --out /tmp/forestbound_k9.graph").status, 0);
  EXPECT_EQ(run("poly pseudoforest /tmp/forestbound_k9.graph").status, 3);
}
