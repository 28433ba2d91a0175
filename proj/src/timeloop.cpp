#include "eulerfv/timeloop.hpp"

#include <cmath>

namespace eulerfv {

double stable_dt(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
                 double cfl) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);

  double max_speed = 0.0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double c = std::sqrt(params.gamma * prim.temp[i]);
    max_speed = std::max(max_speed, norm(prim.vel[i]) + c);
  }
  if (!std::isfinite(max_speed)) throw NonFiniteStateError("stable_dt: non-finite wave speed");

  const double h = grid.h();
  double dt = max_speed > 0.0 ? cfl * h / max_speed : std::numeric_limits<double>::infinity();

  // Parabolic restriction from the mu-diffusion and velocity-penalty terms.
  double mu_max = 0.0;
  switch (params.mu.mode) {
    case MuMode::none:
      break;
    case MuMode::power:
      mu_max = params.mu.c * std::pow(h, params.mu.beta);
      break;
    case MuMode::lax_friedrichs: {
      for (const Face& face : grid.all_faces()) {
        const auto i = static_cast<std::size_t>(face.in_cell);
        FaceTrace<double> theta{prim.temp[i], prim.temp[i]};
        double un = 0.0;
        if (!face.is_boundary()) {
          const auto o = static_cast<std::size_t>(face.out_cell);
          theta.out = prim.temp[o];
          un = 0.5 * face.normal_sign * (prim.vel[i][face.axis] + prim.vel[o][face.axis]);
        }
        mu_max = std::max(mu_max, mu_coefficient(theta, un, h, params.mu, params.gamma));
      }
      break;
    }
  }
  const double diffusive = mu_max + params.penalty_coefficient(h);
  if (diffusive > 0.0) {
    dt = std::min(dt, cfl * h * h / (2.0 * grid.dim() * diffusive));
  }
  return dt;
}

namespace {

struct StageBuffers {
  Residual res;
  RhsWorkspace ws;
  ConservedField u1, u2;
};

// out = x + dt * L(x) given a precomputed residual.
void euler_stage(const ConservedField& x, const Residual& res, double dt, ConservedField& out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.rho[i] = x.rho[i] + dt * res.d_rho[i];
    out.mom[i] = x.mom[i] + dt * res.d_mom[i];
    out.ener[i] = x.ener[i] + dt * res.d_ener[i];
  }
}

}  // namespace

AdvanceResult advance(ConservedField init, const Grid& grid, const SchemeParams& params,
                      const StepController& ctrl, const StepHook& hook, ThreadPool* pool) {
  params.validate();
  if (auto v = find_inadmissible(init, params.gamma, params.floors)) {
    throw AdmissibilityError(*v);
  }

  const std::size_t n = init.size();
  StageBuffers buf;
  buf.u1 = ConservedField(n);
  buf.u2 = ConservedField(n);
  ConservedField next(n);

  AdvanceResult result;
  result.state = std::move(init);
  result.t = 0.0;

  if (hook) hook(0.0, result.state, StepStats{0, 0.0, 0.0, 0, 0});

  while (result.t < ctrl.t_end && result.steps < ctrl.max_steps) {
    double dt = std::min(stable_dt(result.state, grid, params, ctrl.cfl),
                         ctrl.t_end - result.t);
    if (!(dt > 0.0)) break;

    int retries = 0;
    for (;;) {
      bool ok = true;
      AdmissibilityViolation bad;

      const auto admissible = [&](const ConservedField& s) {
        auto v = find_inadmissible(s, params.gamma, params.floors);
        if (v) {
          ok = false;
          bad = *v;
        }
        return ok;
      };

      // Stage states are checked before they feed another rhs evaluation.
      rhs(result.state, grid, params, buf.ws, buf.res, pool);
      euler_stage(result.state, buf.res, dt, buf.u1);
      switch (ctrl.integrator) {
        case Integrator::euler:
          if (admissible(buf.u1)) next = buf.u1;
          break;
        case Integrator::ssprk2:
          if (admissible(buf.u1)) {
            rhs(buf.u1, grid, params, buf.ws, buf.res, pool);
            euler_stage(buf.u1, buf.res, dt, buf.u2);
            blend(next, 0.5, result.state, 0.5, buf.u2);
            admissible(next);
          }
          break;
        case Integrator::ssprk3:
          if (admissible(buf.u1)) {
            rhs(buf.u1, grid, params, buf.ws, buf.res, pool);
            euler_stage(buf.u1, buf.res, dt, buf.u2);
            blend(buf.u1, 0.75, result.state, 0.25, buf.u2);
            if (admissible(buf.u1)) {
              rhs(buf.u1, grid, params, buf.ws, buf.res, pool);
              euler_stage(buf.u1, buf.res, dt, buf.u2);
              blend(next, 1.0 / 3.0, result.state, 2.0 / 3.0, buf.u2);
              admissible(next);
            }
          }
          break;
      }

      if (ok) break;
      if (bad.field == "nonfinite") throw NonFiniteStateError("advance: non-finite state");
      if (++retries > ctrl.max_retries) throw AdmissibilityError(bad);
      dt *= 0.5;
    }

    std::swap(result.state, next);
    result.t += dt;
    // Snap to t_end when the capped step lands there up to roundoff.
    if (ctrl.t_end - result.t < 1e-12 * std::max(ctrl.t_end, 1.0)) result.t = ctrl.t_end;
    result.steps += 1;
    result.total_retries += retries;
    if (hook) {
      hook(result.t, result.state,
           StepStats{result.steps, result.t, dt, retries, result.total_retries});
    }
  }
  return result;
}

}  // namespace eulerfv
