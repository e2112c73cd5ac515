// Command line front end: generate synthetic instances, solve them with the
// manifold or alternating-minimization methods, evaluate haplotype estimates
// and run benchmark sweeps that emit CSV.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "haplo/baselines.hpp"
#include "haplo/bench.hpp"
#include "haplo/datagen.hpp"
#include "haplo/io.hpp"
#include "haplo/metrics.hpp"
#include "haplo/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GenerateArgs {
  int m = 250;
  int n = 300;
  double pd = 0.1;
  double err = 0.25;
  std::uint64_t seed = 1;
  std::string out = "instance";
};

int cmd_generate(const GenerateArgs& args) {
  const haplo::datagen::InstanceSpec spec(args.m, args.n, args.pd, args.err,
                                          args.seed);
  const haplo::datagen::Instance inst = haplo::datagen::generate(spec);
  fs::create_directories(args.out);
  haplo::io::write_matrix_file((fs::path(args.out) / "instance.txt").string(),
                               inst.rm);
  haplo::io::write_ground_truth_file(
      (fs::path(args.out) / "truth.txt").string(), inst.gt);
  std::cout << "|Omega| = " << inst.rm.omega_size()
            << "\n|Omega_E| = " << inst.omega_e.size() << "\nwrote "
            << args.out << "/instance.txt and " << args.out << "/truth.txt\n";
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string method = "manifold-mec";
  std::string truth;
  std::string out;
  haplo::SolverConfig cfg;
};

json metrics_json(const haplo::ReadMatrix& rm, const haplo::Haplotype& est,
                  const std::optional<haplo::GroundTruth>& truth,
                  const haplo::VectorXd& u_est, const haplo::VectorXd& v_est) {
  json m;
  m["mec"] = haplo::metrics::mec(rm, est);
  if (truth.has_value()) {
    m["hamming_distance"] = haplo::metrics::haplotype_distance(
        haplo::Haplotype(truth->h), est);
    haplo::VectorXi cs(u_est.size()), hs(v_est.size());
    for (Eigen::Index i = 0; i < u_est.size(); ++i) cs(i) = u_est(i) >= 0 ? 1 : -1;
    for (Eigen::Index j = 0; j < v_est.size(); ++j) hs(j) = v_est(j) >= 0 ? 1 : -1;
    const haplo::MatrixXd rbar = haplo::full_matrix(*truth).cast<double>();
    const haplo::MatrixXd rhat = (cs * hs.transpose()).cast<double>();
    m["nmse_sign_completion"] = haplo::metrics::nmse(rbar, rhat);
  }
  return m;
}

int cmd_solve(const SolveArgs& args) {
  const haplo::ReadMatrix rm = haplo::io::read_matrix_file(args.instance);
  std::optional<haplo::GroundTruth> truth;
  if (!args.truth.empty()) {
    truth = haplo::io::read_ground_truth_file(args.truth);
  }

  json report;
  report["method"] = args.method;
  report["m"] = rm.rows();
  report["n"] = rm.cols();
  report["omega"] = rm.omega_size();

  std::optional<haplo::Haplotype> est;
  if (args.method == "altmin") {
    const haplo::baselines::AltMinResult res =
        haplo::baselines::altmin_factorize(rm);
    haplo::VectorXi hs(res.v.size());
    for (Eigen::Index j = 0; j < res.v.size(); ++j) hs(j) = res.v(j) >= 0 ? 1 : -1;
    est = haplo::Haplotype(hs);
    report["iterations"] = res.iterations;
    report["objective"] = res.objective;
    report["metrics"] = metrics_json(rm, *est, truth, res.u, res.v);
  } else {
    haplo::solver::SolveResult res =
        args.method == "manifold-mec"
            ? haplo::solver::solve(rm, args.cfg)
            : haplo::baselines::frobenius_manifold_solve(rm, args.cfg);
    est = res.haplotype;
    report["iterations"] = res.iterations;
    report["termination"] = haplo::solver::to_string(res.termination);
    report["converged"] = res.converged;
    report["final_grad_norm"] = res.final_grad_norm;
    report["zero_sign_count"] = res.zero_sign_count;
    report["degenerate_retractions"] = res.degenerate_retractions;
    report["cost_initial"] = res.cost_trace.front();
    report["cost_final"] = res.cost_trace.back();
    report["cost_trace"] = res.cost_trace;
    report["metrics"] =
        metrics_json(rm, *est, truth, res.x_final.u(), res.x_final.v());
  }

  if (!args.out.empty()) {
    fs::create_directories(args.out);
    haplo::io::write_haplotype_file(
        (fs::path(args.out) / "haplotype.txt").string(), *est);
    std::ofstream rep(fs::path(args.out) / "report.json");
    rep << report.dump(2) << "\n";
    std::cout << "wrote " << args.out << "/haplotype.txt and " << args.out
              << "/report.json\n";
  }
  std::cout << report["metrics"].dump(2) << "\n";
  return 0;
}

struct EvalArgs {
  std::string instance;
  std::string haplotype;
  std::string truth;
};

int cmd_eval(const EvalArgs& args) {
  const haplo::ReadMatrix rm = haplo::io::read_matrix_file(args.instance);
  const haplo::Haplotype est = haplo::io::read_haplotype_file(args.haplotype);
  std::cout << "mec = " << haplo::metrics::mec(rm, est) << "\n";
  if (!args.truth.empty()) {
    const haplo::GroundTruth gt = haplo::io::read_ground_truth_file(args.truth);
    std::cout << "hamming_distance = "
              << haplo::metrics::haplotype_distance(haplo::Haplotype(gt.h), est)
              << "\n";
  }
  return 0;
}

struct BenchArgs {
  haplo::bench::SweepConfig sweep;
  std::vector<std::string> methods;
  std::string p_schedule = "none";
  std::string out = "bench.csv";
  bool per_trial = false;
};

int cmd_bench(BenchArgs& args) {
  if (!args.methods.empty()) {
    args.sweep.methods.clear();
    for (const std::string& name : args.methods) {
      args.sweep.methods.push_back(haplo::bench::method_from_string(name));
    }
  }
  args.sweep.p_schedule_linear = args.p_schedule == "linear";
  const haplo::bench::SweepResult result = haplo::bench::run_sweep(args.sweep);

  std::ofstream out(args.out);
  if (!out) {
    throw haplo::IoError("cannot open " + args.out + " for writing");
  }
  out << haplo::bench::aggregate_csv(result);
  std::cout << "wrote " << args.out << " (" << result.rows.size() << " rows)\n";
  if (args.per_trial) {
    fs::path trial_path(args.out);
    trial_path.replace_extension(".trials.csv");
    std::ofstream tout(trial_path);
    if (!tout) {
      throw haplo::IoError("cannot open " + trial_path.string() + " for writing");
    }
    tout << haplo::bench::per_trial_csv(result);
    std::cout << "wrote " << trial_path.string() << " ("
              << result.trial_rows.size() << " rows)\n";
  }
  return 0;
}

void add_solver_options(CLI::App* cmd, haplo::SolverConfig& cfg) {
  cmd->add_option("--gamma1", cfg.gamma1, "sign-smoothing amplitude, in (0, 2/pi)");
  cmd->add_option("--gamma2", cfg.gamma2, "sign-smoothing slope, > 0");
  cmd->add_option("--p", cfg.p, "residual norm exponent, in [1, 2]");
  cmd->add_option("--alpha-bar", cfg.alpha_bar, "initial line-search step");
  cmd->add_option("--beta", cfg.beta, "backtracking shrink factor, in (0, 1)");
  cmd->add_option("--sigma", cfg.sigma_armijo, "sufficient-decrease constant");
  cmd->add_option("--tau", cfg.tau, "gradient-norm stopping tolerance");
  cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
  cmd->add_option("--max-backtracks", cfg.max_backtracks, "line-search cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-one matrix completion for haplotype assembly"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cgen = app.add_subcommand("generate", "write a synthetic instance");
  cgen->add_option("--m", gen.m, "number of reads")->check(CLI::PositiveNumber);
  cgen->add_option("--n", gen.n, "number of sites")->check(CLI::PositiveNumber);
  cgen->add_option("--pd", gen.pd, "observation probability in (0, 1]")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  cgen->add_option("--err", gen.err, "|Omega_E|/|Omega| in [0, 1)")
      ->check(CLI::Range(0.0, std::nextafter(1.0, 0.0)));
  cgen->add_option("--seed", gen.seed, "instance seed");
  cgen->add_option("--out", gen.out, "output directory");

  SolveArgs sol;
  CLI::App* csol = app.add_subcommand("solve", "solve one instance file");
  csol->add_option("--instance", sol.instance, "read-matrix file")->required();
  csol->add_option("--method", sol.method, "solver to run")
      ->check(CLI::IsMember({"manifold-mec", "manifold-fro", "altmin"}));
  csol->add_option("--truth", sol.truth, "ground-truth file for scoring");
  csol->add_option("--out", sol.out, "directory for haplotype and report");
  add_solver_options(csol, sol.cfg);

  EvalArgs ev;
  CLI::App* cev = app.add_subcommand("eval", "score a haplotype estimate");
  cev->add_option("--instance", ev.instance, "read-matrix file")->required();
  cev->add_option("--haplotype", ev.haplotype, "estimate file")->required();
  cev->add_option("--truth", ev.truth, "ground-truth file");

  BenchArgs bn;
  if (const char* env_jobs = std::getenv("HAPLO_JOBS")) {
    bn.sweep.jobs = std::max(1, std::atoi(env_jobs));
  }
  CLI::App* cbn = app.add_subcommand("bench", "run a benchmark sweep, emit CSV");
  cbn->add_option("--m", bn.sweep.m, "number of reads")->check(CLI::PositiveNumber);
  cbn->add_option("--n", bn.sweep.n, "number of sites")->check(CLI::PositiveNumber);
  cbn->add_option("--pd", bn.sweep.pds, "observation probabilities")
      ->delimiter(',');
  cbn->add_option("--err", bn.sweep.errs, "error ratios")->delimiter(',');
  cbn->add_option("--trials", bn.sweep.trials, "trials per grid point")
      ->check(CLI::PositiveNumber);
  cbn->add_option("--seed", bn.sweep.base_seed, "base seed; trial t uses seed+t");
  cbn->add_option("--methods", bn.methods, "methods to compare")
      ->delimiter(',')
      ->check(CLI::IsMember({"manifold-mec", "manifold-fro", "altmin"}));
  cbn->add_option("--p-schedule", bn.p_schedule,
                  "p selection: none (fixed --p) or linear in err ratio")
      ->check(CLI::IsMember({"none", "linear"}));
  cbn->add_option("--jobs", bn.sweep.jobs, "worker threads (default HAPLO_JOBS or 1)");
  cbn->add_option("--out", bn.out, "aggregate CSV path");
  cbn->add_flag("--per-trial", bn.per_trial, "also write per-trial CSV");
  add_solver_options(cbn, bn.sweep.solver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cgen) return cmd_generate(gen);
    if (*csol) {
      sol.cfg.validate();
      return cmd_solve(sol);
    }
    if (*cev) return cmd_eval(ev);
    if (*cbn) {
      bn.sweep.solver.validate();
      return cmd_bench(bn);
    }
  } catch (const haplo::InadmissibleStartError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "the initial point does not satisfy f(X0) < |Omega| "
              << "(f(X0) = " << e.f0 << ", |Omega| = " << e.omega << ")\n";
    return 1;
  } catch (const haplo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
