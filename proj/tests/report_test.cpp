#include <cmath>
#include <filesystem>
#include <fstream>
#include <gtest/gtest.h>

#include "thetaqmc/report.hpp"

using namespace thetaqmc;

namespace {

GraphSource family_source(const std::string& spec, std::uint64_t seed = 0) {
  return load_graph_source(std::nullopt, spec, seed);
}

const Check* find_check(const BoundReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(GraphSourceTest, ExactlyOneSource) {
  EXPECT_THROW(load_graph_source(std::nullopt, std::nullopt, 0), std::invalid_argument);
  EXPECT_THROW(load_graph_source(std::string("a"), std::string("cycle:5"), 0), std::invalid_argument);
  EXPECT_EQ(family_source("cycle:5").descriptor, "family:cycle:5");
  EXPECT_THROW(family_source("hypercube:3"), std::invalid_argument);
}

TEST(GraphSourceTest, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "thetaqmc_report_test.edges";
  {
    std::ofstream out(path);
    out << "n 3\n0 1\n1 2\n";
  }
  const GraphSource src = load_graph_source(path.string(), std::nullopt, 0);
  EXPECT_EQ(src.graph.num_edges(), 2u);
  std::filesystem::remove(path);
}

TEST(MakeCheckTest, SlackAndAllowance) {
  const Check a = make_check("c", "x", 1.0, "y", 1.0 + 1e-7, 1e-6);
  EXPECT_TRUE(a.pass);
  EXPECT_NEAR(a.slack, -1e-7, 1e-15);
  EXPECT_FALSE(make_check("c", "x", 1.0, "y", 1.1, 1e-6).pass);
}

TEST(RunThetaTest, FiveCycle) {
  const BoundReport r = run_theta(family_source("cycle:5"), {});
  ASSERT_TRUE(r.theta.has_value());
  EXPECT_NEAR(r.theta->kappa, std::sqrt(5.0), 1e-4);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.theta->gram.has_value());
}

TEST(RunThetaTest, EdgelessFails) {
  const BoundReport r = run_theta({"test", Graph(3, {})}, {});
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.notes.empty());
  EXPECT_EQ(r.notes.front(), "bound = 0 (no edges)");
}

TEST(RunVerifyTest, PetersenAllChecksPass) {
  RunOptions o;
  o.seed = 7;
  const BoundReport r = run_verify(family_source("petersen"), o);
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.bound_qmc.has_value());
  EXPECT_NEAR(*r.bound_qmc, 5.872, 1e-3);
  EXPECT_EQ(r.checks.size(), 4u);
  for (const char* name : {"rounding_mean_ge_bound", "exact_ge_bound", "best_le_exact", "exact_ge_trivial"}) {
    ASSERT_NE(find_check(r, name), nullptr) << name;
  }
}

TEST(RunVerifyTest, SingleEdgeAndClassicalModel) {
  const BoundReport k2 = run_verify(family_source("complete:2"), {});
  EXPECT_TRUE(k2.passed());
  EXPECT_NEAR(*k2.bound_qmc, 0.46221, 1e-5);
  EXPECT_NEAR(*k2.exact_qmc, 1.0, 1e-9);

  RunOptions o;
  o.model = Model::mc;
  const BoundReport c5 = run_verify(family_source("cycle:5"), o);
  EXPECT_TRUE(c5.passed());
  EXPECT_EQ(*c5.exact_mc, 4);
  EXPECT_NEAR(*c5.bound_mc, 2.5 * (1.0 + 2.0 / M_PI / (std::sqrt(5.0) - 1.0)), 1e-5);
}

TEST(RunVerifyTest, ExactSkippedAboveCap) {
  RunOptions o;
  o.max_exact_n = 4;
  o.trials = 200;
  const BoundReport r = run_verify(family_source("cycle:5"), o);
  EXPECT_FALSE(r.exact_qmc.has_value());
  EXPECT_EQ(r.checks.size(), 1u);
}

TEST(RunGpTest, FiveCycle) {
  RunOptions o;
  o.trials = 5000;
  const BoundReport r = run_gp(family_source("cycle:5"), o);
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.gp.has_value());
  EXPECT_GE(r.gp->relaxation_value, *r.exact_qmc - 1e-5);
}

TEST(JsonTest, SchemaFields) {
  RunOptions o;
  o.trials = 100;
  o.include_gram = true;
  const auto j = to_json(run_verify(family_source("complete:3"), o));
  EXPECT_EQ(j["report_version"], 1);
  EXPECT_EQ(j["graph"]["n"], 3);
  EXPECT_EQ(j["graph"]["m"], 3);
  EXPECT_EQ(j["constants"][0]["symbol"], "8/(3*pi)");
  EXPECT_NEAR(j["constants"][0]["value"].get<double>(), 8.0 / (3.0 * M_PI), 1e-15);
  EXPECT_EQ(j["theta"]["gram"].size(), 3u);
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("lhs"));
    EXPECT_TRUE(c.contains("rhs"));
    EXPECT_TRUE(c.contains("slack"));
  }
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(SweepTest, CyclesAreDeterministic) {
  RunOptions o;
  o.trials = 300;
  o.seed = 4;
  const std::vector<std::string> specs = {"cycle:5", "cycle:6", "cycle:7", "cycle:8", "cycle:9"};
  const std::string a = run_sweep(specs, o);
  EXPECT_EQ(a, run_sweep(specs, o));

  std::istringstream in(a);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kSweepHeader);
  int rows = 0;
  long previous_m = -1;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 12u) << line;
    const long m = std::stol(cells[2]);
    EXPECT_GT(m, previous_m);
    previous_m = m;
    EXPECT_EQ(cells[11], "4");
  }
  EXPECT_EQ(rows, 5);
}

TEST(SweepTest, EdgelessRowHasEmptyCells) {
  const std::string csv = run_sweep({"path:1"}, {});
  EXPECT_NE(csv.find("path:1,1,0,,,,,,,,,0"), std::string::npos);
}
