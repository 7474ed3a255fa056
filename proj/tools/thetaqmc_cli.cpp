// thetaqmc: Lovasz-theta lower bounds on Quantum Max Cut, with rounding and
// exact verification on small graphs.
//
//   thetaqmc theta  --family cycle:5
//   thetaqmc verify --family petersen --trials 10000 --seed 7 --model qmc
//   thetaqmc gp     --graph g.edges --json report.json
//   thetaqmc sweep  --family cycle:5 --family cycle:6 --csv out.csv

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetaqmc/error.hpp"
#include "thetaqmc/report.hpp"

namespace {

struct Flags {
  std::string graph_path;
  std::vector<std::string> families;
  std::string model = "qmc";
  long trials = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-7;
  long max_iter = 200000;
  int max_exact_n = 20;
  std::string json_path;
  std::string csv_path;
  bool gram = false;
};

void add_common(CLI::App* cmd, Flags& f, bool multi_family) {
  cmd->add_option("--graph", f.graph_path, "Edge-list or DIMACS graph file");
  if (multi_family) {
    cmd->add_option("--family", f.families, "Graph family NAME[:p1[:p2]], repeatable")->required();
  } else {
    cmd->add_option("--family", f.families, "Graph family NAME[:p1[:p2]]")->expected(1);
  }
  cmd->add_option("--seed", f.seed, "Master seed (rounding, Lanczos start, erdos_renyi)");
  cmd->add_option("--tol", f.tol, "SDP tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", f.max_iter, "SDP iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--max-exact-n", f.max_exact_n, "Largest n for exact spectra and brute-force cuts");
  cmd->add_option("--json", f.json_path, "Write the JSON report here ('-' for stdout)");
}

int emit(const thetaqmc::BoundReport& report, const Flags& f) {
  (f.json_path == "-" ? std::cerr : std::cout) << thetaqmc::to_text(report);
  if (!f.json_path.empty()) {
    const std::string doc = thetaqmc::to_json(report).dump(2) + "\n";
    if (f.json_path == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(f.json_path);
      if (!out) throw std::runtime_error("cannot write " + f.json_path);
      out << doc;
    }
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lovasz theta lower bounds on Quantum Max Cut"};
  app.require_subcommand(1);
  Flags f;

  auto* theta = app.add_subcommand("theta", "theta(complement of G) and its unit-vector witness");
  add_common(theta, f, false);
  theta->add_flag("--gram", f.gram, "Include the Gram matrix in the JSON report");

  auto* verify = app.add_subcommand("verify", "Bound, rounding estimate and exact value, with checks");
  add_common(verify, f, false);
  verify->add_option("--model", f.model, "qmc | xx | mc")->check(CLI::IsMember({"qmc", "xx", "mc"}));
  verify->add_option("--trials", f.trials, "Rounding trials")->check(CLI::PositiveNumber);

  auto* gp = app.add_subcommand("gp", "Moment-matrix relaxation with product-state rounding");
  add_common(gp, f, false);
  gp->add_option("--trials", f.trials, "Rounding trials")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "CSV table over a list of graph families");
  add_common(sweep, f, true);
  sweep->add_option("--trials", f.trials, "Rounding trials for the GP columns")->check(CLI::PositiveNumber);
  sweep->add_option("--csv", f.csv_path, "Output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    thetaqmc::RunOptions opts;
    opts.model = thetaqmc::parse_model(f.model);
    opts.trials = f.trials;
    opts.seed = f.seed;
    opts.tol = f.tol;
    opts.max_iter = f.max_iter;
    opts.max_exact_n = f.max_exact_n;
    opts.include_gram = f.gram;

    if (sweep->parsed()) {
      const std::string csv = thetaqmc::run_sweep(f.families, opts);
      if (f.csv_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(f.csv_path);
        if (!out) throw std::runtime_error("cannot write " + f.csv_path);
        out << csv;
      }
      return 0;
    }

    std::optional<std::string> path;
    std::optional<std::string> family;
    if (!f.graph_path.empty()) path = f.graph_path;
    if (!f.families.empty()) family = f.families.front();
    const thetaqmc::GraphSource source = thetaqmc::load_graph_source(path, family, f.seed);

    if (theta->parsed()) return emit(thetaqmc::run_theta(source, opts), f);
    if (verify->parsed()) return emit(thetaqmc::run_verify(source, opts), f);
    return emit(thetaqmc::run_gp(source, opts), f);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const thetaqmc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
