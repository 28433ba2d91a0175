#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include "eulerfv/scheme.hpp"

namespace eulerfv {

enum class Integrator { euler, ssprk2, ssprk3 };

struct StepController {
  double cfl = 0.3;
  double t_end = 0.0;
  int max_retries = 12;
  Integrator integrator = Integrator::ssprk2;
  std::int64_t max_steps = std::numeric_limits<std::int64_t>::max();
};

class NonFiniteStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Advective CFL step cfl*h/max(|u|+c), combined with the parabolic
/// restriction cfl*h^2/(2 dim (mu_max + h^(alpha-1))) whenever diffusion or
/// the velocity penalty is active. May return +inf (stagnant cold gas); the
/// caller caps by the remaining time.
double stable_dt(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
                 double cfl);

struct StepStats {
  std::int64_t step = 0;
  double t = 0.0;    // time after the step
  double dt = 0.0;   // accepted step size
  int retries = 0;   // halvings needed for this step
  std::int64_t total_retries = 0;
};

/// Called after every accepted step, and once at t = 0 with step 0.
using StepHook = std::function<void(double t, const ConservedField&, const StepStats&)>;

struct AdvanceResult {
  ConservedField state;
  double t = 0.0;
  std::int64_t steps = 0;
  std::int64_t total_retries = 0;
};

/// Explicit SSP time integration to t_end. Each stage is a convex
/// combination of forward-Euler steps in flux form, so total mass and energy
/// are conserved to roundoff. A stage that leaves the admissible set aborts
/// the step; the step is retried with dt/2 up to max_retries, then
/// AdmissibilityError is thrown. Floors are never applied to the state.
AdvanceResult advance(ConservedField init, const Grid& grid, const SchemeParams& params,
                      const StepController& ctrl, const StepHook& hook = {},
                      ThreadPool* pool = nullptr);

}  // namespace eulerfv
