#include "haplo/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "haplo/baselines.hpp"
#include "haplo/metrics.hpp"
#include "haplo/solver.hpp"

namespace haplo::bench {

std::string to_string(Method m) {
  switch (m) {
    case Method::ManifoldMec:
      return "manifold-mec";
    case Method::ManifoldFro:
      return "manifold-fro";
    case Method::AltMin:
      return "altmin";
  }
  return "unknown";
}

Method method_from_string(const std::string& s) {
  if (s == "manifold-mec") return Method::ManifoldMec;
  if (s == "manifold-fro") return Method::ManifoldFro;
  if (s == "altmin") return Method::AltMin;
  throw InvalidArgumentError("unknown method '" + s + "'");
}

std::vector<Method> all_methods() {
  return {Method::ManifoldMec, Method::ManifoldFro, Method::AltMin};
}

double schedule_p(double err_ratio, bool linear, double fixed_p) {
  if (!linear) {
    return fixed_p;
  }
  constexpr double kErrLo = 0.14, kErrHi = 0.28;
  constexpr double kPLo = 1.05, kPHi = 1.2;
  if (err_ratio <= kErrLo) return kPLo;
  if (err_ratio >= kErrHi) return kPHi;
  return kPLo + (kPHi - kPLo) * (err_ratio - kErrLo) / (kErrHi - kErrLo);
}

namespace {

VectorXi sign_vector(const VectorXd& v) {
  VectorXi out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out(k) = v(k) >= 0.0 ? 1 : -1;
  }
  return out;
}

// The completed-matrix estimate fed to NMSE: the +/-1 sign completion
// chat * hhat^T induced by the solution factors.
double sign_completed_nmse(const GroundTruth& gt, const VectorXd& u,
                           const VectorXd& v) {
  const MatrixXd truth = full_matrix(gt).cast<double>();
  const MatrixXd est =
      (sign_vector(u) * sign_vector(v).transpose()).cast<double>();
  return metrics::nmse(truth, est);
}

struct GridPoint {
  double pd;
  double err_ratio;
  double p;
};

TrialOutcome run_method(Method method, const datagen::Instance& inst,
                        const GridPoint& point, const SolverConfig& base,
                        std::uint64_t seed) {
  TrialOutcome out;
  out.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Haplotype truth_h(inst.gt.h);
    Haplotype est(VectorXi::Ones(inst.rm.cols()));
    VectorXd u_est, v_est;
    switch (method) {
      case Method::ManifoldMec: {
        SolverConfig cfg = base;
        cfg.p = point.p;
        cfg.validate();
        solver::SolveResult res = solver::solve(inst.rm, cfg);
        est = res.haplotype;
        u_est = res.x_final.u();
        v_est = res.x_final.v();
        out.iterations = res.iterations;
        break;
      }
      case Method::ManifoldFro: {
        solver::SolveResult res = baselines::frobenius_manifold_solve(inst.rm, base);
        est = res.haplotype;
        u_est = res.x_final.u();
        v_est = res.x_final.v();
        out.iterations = res.iterations;
        break;
      }
      case Method::AltMin: {
        baselines::AltMinResult res = baselines::altmin_factorize(inst.rm);
        est = Haplotype(sign_vector(res.v));
        u_est = res.u;
        v_est = res.v;
        out.iterations = res.iterations;
        break;
      }
    }
    out.nmse = sign_completed_nmse(inst.gt, u_est, v_est);
    out.hd = metrics::haplotype_distance(truth_h, est);
    out.mec = metrics::mec(inst.rm, est);
  } catch (const Error& err) {
    out.failed = true;
    out.failure = err.what();
  }
  out.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return out;
}

struct Stats {
  double mean = 0.0;
  double sd = 0.0;
};

Stats stats_of(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) {
    return s;
  }
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double acc = 0.0;
    for (double x : xs) acc += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(acc / static_cast<double>(xs.size() - 1));
  }
  return s;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.solver.validate();
  if (cfg.trials < 1) {
    throw InvalidArgumentError("trials must be >= 1");
  }
  if (cfg.pds.empty() || cfg.errs.empty()) {
    throw InvalidArgumentError("sweep needs at least one pd and one err value");
  }
  if (cfg.methods.empty()) {
    throw InvalidArgumentError("sweep needs at least one method");
  }

  std::vector<GridPoint> grid;
  for (double pd : cfg.pds) {
    for (double err : cfg.errs) {
      grid.push_back(GridPoint{
          pd, err, schedule_p(err, cfg.p_schedule_linear, cfg.solver.p)});
    }
  }

  // outcomes[g][t][k]: grid point g, trial t, method k
  std::vector<std::vector<std::vector<TrialOutcome>>> outcomes(
      grid.size(), std::vector<std::vector<TrialOutcome>>(
                       cfg.trials, std::vector<TrialOutcome>(cfg.methods.size())));

  const std::size_t task_count = grid.size() * static_cast<std::size_t>(cfg.trials);
  std::atomic<std::size_t> next{0};
  const int jobs = std::max(1, cfg.jobs);

  auto worker = [&]() {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= task_count) {
        return;
      }
      const std::size_t g = task / static_cast<std::size_t>(cfg.trials);
      const int t = static_cast<int>(task % static_cast<std::size_t>(cfg.trials));
      const GridPoint& point = grid[g];
      const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(t);
      const datagen::Instance inst = datagen::generate(
          datagen::InstanceSpec(cfg.m, cfg.n, point.pd, point.err_ratio, seed));
      for (std::size_t k = 0; k < cfg.methods.size(); ++k) {
        outcomes[g][t][k] =
            run_method(cfg.methods[k], inst, point, cfg.solver, seed);
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  SweepResult result;
  result.config = cfg;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t k = 0; k < cfg.methods.size(); ++k) {
      AggregateRow row;
      row.method = cfg.methods[k];
      row.m = cfg.m;
      row.n = cfg.n;
      row.pd = grid[g].pd;
      row.err_ratio = grid[g].err_ratio;
      row.p = grid[g].p;
      row.gamma1 = cfg.solver.gamma1;
      row.gamma2 = cfg.solver.gamma2;
      row.trials = cfg.trials;
      std::vector<double> nmses, hds, mecs, iters, times;
      for (int t = 0; t < cfg.trials; ++t) {
        const TrialOutcome& o = outcomes[g][t][k];
        result.trial_rows.push_back(
            TrialRow{cfg.methods[k], grid[g].pd, grid[g].err_ratio, grid[g].p, t, o});
        if (o.failed) {
          ++row.failures;
          continue;
        }
        nmses.push_back(o.nmse);
        hds.push_back(static_cast<double>(o.hd));
        mecs.push_back(static_cast<double>(o.mec));
        iters.push_back(static_cast<double>(o.iterations));
        times.push_back(o.ms);
      }
      const Stats sn = stats_of(nmses);
      const Stats sh = stats_of(hds);
      const Stats sm = stats_of(mecs);
      row.mean_nmse = sn.mean;
      row.sd_nmse = sn.sd;
      row.mean_hd = sh.mean;
      row.sd_hd = sh.sd;
      row.mean_mec = sm.mean;
      row.sd_mec = sm.sd;
      row.mean_iters = stats_of(iters).mean;
      row.mean_ms = stats_of(times).mean;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::string aggregate_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "method,m,n,pd,err_ratio,p,gamma1,gamma2,trials,failures,"
         "mean_nmse,sd_nmse,mean_hd,sd_hd,mean_mec,sd_mec,mean_iters,mean_ms\n";
  for (const AggregateRow& r : result.rows) {
    out << to_string(r.method) << "," << r.m << "," << r.n << "," << fmt(r.pd)
        << "," << fmt(r.err_ratio) << "," << fmt(r.p) << "," << fmt(r.gamma1)
        << "," << fmt(r.gamma2) << "," << r.trials << "," << r.failures << ","
        << fmt(r.mean_nmse) << "," << fmt(r.sd_nmse) << "," << fmt(r.mean_hd)
        << "," << fmt(r.sd_hd) << "," << fmt(r.mean_mec) << "," << fmt(r.sd_mec)
        << "," << fmt(r.mean_iters) << "," << fmt_ms(r.mean_ms) << "\n";
  }
  return out.str();
}

std::string per_trial_csv(const SweepResult& result) {
  const SweepConfig& cfg = result.config;
  std::ostringstream out;
  out << "method,m,n,pd,err_ratio,p,gamma1,gamma2,trial,seed,failed,"
         "nmse,hd,mec,iterations,ms\n";
  for (const TrialRow& r : result.trial_rows) {
    const TrialOutcome& o = r.outcome;
    out << to_string(r.method) << "," << cfg.m << "," << cfg.n << ","
        << fmt(r.pd) << "," << fmt(r.err_ratio) << "," << fmt(r.p) << ","
        << fmt(cfg.solver.gamma1) << "," << fmt(cfg.solver.gamma2) << ","
        << r.trial << "," << o.seed << "," << (o.failed ? 1 : 0) << ",";
    if (o.failed) {
      out << ",,,";
    } else {
      out << fmt(o.nmse) << "," << o.hd << "," << o.mec << "," << o.iterations;
    }
    out << "," << fmt_ms(o.ms) << "\n";
  }
  return out.str();
}

}  // namespace haplo::bench
