#include "eulerfv/convergence.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <random>

#include "eulerfv/initial_conditions.hpp"
#include "eulerfv/timeloop.hpp"

namespace eulerfv {

namespace {

struct L1Errors {
  double rho = 0.0, mom = 0.0, ener = 0.0;
};

L1Errors l1_errors(const ConservedField& state, const Grid& grid, const ExactSolution& sol,
                   double t, double gamma) {
  L1Errors e;
  const double vol = grid.cell_volume();
  for (std::int64_t c = 0; c < grid.cell_count(); ++c) {
    const auto i = static_cast<std::size_t>(c);
    const PrimitiveSample ex = sol.eval(t, grid.cell_center(static_cast<std::int32_t>(c)));
    const Vec3 mom_ex = ex.rho * ex.vel;
    e.rho += vol * std::abs(state.rho[i] - ex.rho);
    e.mom += vol * norm(state.mom[i] - mom_ex);
    e.ener += vol * std::abs(state.ener[i] - total_energy(ex.rho, ex.vel, ex.pres, gamma));
  }
  return e;
}

}  // namespace

ConvergenceResult convergence_study(const RunConfig& base, int levels, int threads,
                                    std::ostream* log) {
  if (levels < 1) throw std::invalid_argument("convergence_study: levels must be >= 1");
  SchemeParams params = base.scheme_params();
  params.validate();
  if (!(base.t_end > 0.0)) throw ConfigError(0, "t_end must be > 0 for a convergence study");
  if (!has_exact_solution(base.ic))
    throw std::invalid_argument("convergence_study: no exact solution for ic '" + base.ic + "'");

  std::unique_ptr<ThreadPool> pool;
  if (threads > 1) pool = std::make_unique<ThreadPool>(threads);

  // Setup self-test of smooth reference solutions: pointwise Euler residual
  // by finite differences at random interior samples.
  {
    const Grid probe = base.build_grid();
    const ExactSolution sol = exact_solution_for(base.ic, base.ic_params, probe, base.gamma);
    if (sol.smooth) {
      std::mt19937_64 rng(20240u);
      Vec3 lo, len;
      for (int a = 0; a < probe.dim(); ++a) {
        lo[a] = probe.lo(a);
        len[a] = probe.extent(a);
      }
      const double worst = max_euler_residual(sol, base.gamma, lo, len, 100, rng);
      if (worst > 1e-6)
        throw std::runtime_error("exact solution '" + sol.name +
                                 "' fails the PDE residual self-test: " + std::to_string(worst));
    }
  }

  ConvergenceResult result;
  const auto ladder = base.refinement_ladder(levels);
  for (int k = 0; k < levels; ++k) {
    RunConfig cfg = base;
    cfg.cells = ladder[static_cast<std::size_t>(k)];
    const Grid grid = cfg.build_grid();
    const ExactSolution sol = exact_solution_for(cfg.ic, cfg.ic_params, grid, cfg.gamma);

    ConservedField state = initial_condition(cfg.ic, cfg.ic_params, grid, cfg.gamma);

    StepController ctrl;
    ctrl.cfl = cfg.cfl;
    ctrl.t_end = cfg.t_end;
    ctrl.integrator = cfg.integrator;

    BvAccumulator bv;
    const StepHook hook = [&](double t, const ConservedField& s, const StepStats& stats) {
      if (stats.step % cfg.diag_every == 0 || t >= cfg.t_end)
        bv.sample(t, weak_bv_rates(s, grid, params));
    };

    const AdvanceResult adv = advance(std::move(state), grid, params, ctrl, hook, pool.get());
    const L1Errors err = l1_errors(adv.state, grid, sol, adv.t, cfg.gamma);

    EocRow row;
    row.h = grid.h();
    row.l1_rho = err.rho;
    row.l1_mom = err.mom;
    row.l1_ener = err.ener;
    row.bv = bv.totals();
    if (k == 0) {
      row.eoc_rho = row.eoc_mom = row.eoc_ener = std::numeric_limits<double>::quiet_NaN();
    } else {
      const EocRow& prev = result.rows.back();
      row.eoc_rho = std::log2(prev.l1_rho / err.rho);
      row.eoc_mom = std::log2(prev.l1_mom / err.mom);
      row.eoc_ener = std::log2(prev.l1_ener / err.ener);
    }
    result.rows.push_back(row);

    if (log) {
      *log << "  h = " << row.h << "  L1(rho) = " << row.l1_rho << "  steps = " << adv.steps
           << (k > 0 ? "  EOC(rho) = " + std::to_string(row.eoc_rho) : std::string()) << "\n";
    }
  }

  result.eoc_path = std::filesystem::path(base.out_dir) / "eoc.csv";
  write_eoc(result.eoc_path, result.rows);
  return result;
}

}  // namespace eulerfv
