#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetaqmc/graph.hpp"
#include "thetaqmc/rounding.hpp"

namespace thetaqmc {

inline constexpr int kReportVersion = 1;

struct GraphSource {
  std::string descriptor;  // "family:cycle:5" or "file:path"
  Graph graph;
};

/// Exactly one of `path` and `family` must be set.
GraphSource load_graph_source(const std::optional<std::string>& path, const std::optional<std::string>& family,
                              std::uint64_t seed);

struct RunOptions {
  Model model = Model::qmc;
  long trials = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-7;
  long max_iter = 200000;
  int max_exact_n = 20;
  bool include_gram = false;
};

/// Named inequality lhs >= rhs, accepted when lhs - rhs >= -allowance.
struct Check {
  std::string name;
  std::string lhs_name;
  double lhs = 0.0;
  std::string rhs_name;
  double rhs = 0.0;
  double allowance = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool pass = false;
};

Check make_check(std::string name, std::string lhs_name, double lhs, std::string rhs_name, double rhs,
                 double allowance);

struct ThetaSection {
  double kappa = 0.0;
  double t = 0.0;
  double residual = 0.0;
  long solver_iterations = 0;
  std::optional<std::vector<std::vector<double>>> gram;
};

struct RoundingSection {
  std::string model;
  double mean = 0.0;
  double stderr_ = 0.0;
  double best = 0.0;
  long trials = 0;
  bool single_trial = false;
  std::uint64_t seed = 0;
};

struct GpSection {
  double relaxation_value = 0.0;
  double ratio = 0.0;
  double denominator = 0.0;
  bool upper_bound_denominator = false;
};

struct BoundReport {
  std::string command;
  std::string source;
  int n = 0;
  std::size_t m = 0;
  std::optional<ThetaSection> theta;
  std::optional<double> bound_qmc;
  std::optional<double> bound_xx;
  std::optional<double> bound_mc;
  std::optional<RoundingSection> rounding;
  std::optional<double> exact_qmc;
  std::optional<double> exact_xx;
  std::optional<long> exact_mc;
  std::optional<GpSection> gp;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool failed = false;  // set for hard failures (e.g. edgeless input)

  bool passed() const;
};

BoundReport run_theta(const GraphSource& source, const RunOptions& options);
BoundReport run_verify(const GraphSource& source, const RunOptions& options);
BoundReport run_gp(const GraphSource& source, const RunOptions& options);

/// Header of run_sweep's CSV, in column order.
inline constexpr const char* kSweepHeader =
    "graph,n,m,kappa,bound_qmc,bound_xx,bound_mc,mc_exact,qmc_exact,gp_relax,gp_ratio,seed";

/// One CSV row per family spec; reals printed with 12 significant digits,
/// cells left empty when a value is not computed.
std::string run_sweep(const std::vector<std::string>& family_specs, const RunOptions& options);

nlohmann::ordered_json to_json(const BoundReport& report);
std::string to_text(const BoundReport& report);

}  // namespace thetaqmc
