#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eulerfv/diagnostics.hpp"
#include "eulerfv/riemann.hpp"
#include "eulerfv/timeloop.hpp"
#include "test_support.hpp"

using namespace eulerfv;
using test_support::grid_1d;
using test_support::random_state;
using test_support::uniform_state;

TEST_CASE("stable_dt: advective bound") {
  const Grid g = grid_1d(100, BoundaryKind::periodic, 0.0, 1.0);
  SchemeParams p;
  p.mu.mode = MuMode::none;
  p.penalty = false;
  const ConservedField f = uniform_state(g, 1.0, Vec3{}, 1.0, p.gamma);  // theta = 1
  const double dt = stable_dt(f, g, p, 0.5);
  CHECK(dt == doctest::Approx(0.5 * 0.01 / std::sqrt(1.4)).epsilon(1e-6));
  CHECK(dt == doctest::Approx(0.0042258).epsilon(1e-4));
}

TEST_CASE("stable_dt: parabolic bound from diffusion and penalty") {
  const Grid g = grid_1d(10, BoundaryKind::periodic, 0.0, 1.0);  // h = 0.1
  SchemeParams p;
  p.alpha = 1.0;                        // h^(alpha-1) = 1
  p.mu = MuSpec{MuMode::power, 0.2, 0.0};  // mu = 0.2
  // Make the advective bound large: tiny wave speed.
  const ConservedField f = uniform_state(g, 1.0, Vec3{}, 1e-8, p.gamma);
  const double dt = stable_dt(f, g, p, 0.5);
  CHECK(dt == doctest::Approx(0.5 * 0.01 / (2.0 * 1.2)).epsilon(1e-12));
  CHECK(dt == doctest::Approx(0.002083).epsilon(1e-3));
}

TEST_CASE("stable_dt: stagnant cold gas gives an unbounded step, capped by t_end") {
  const Grid g = grid_1d(4, BoundaryKind::periodic);
  SchemeParams p;
  p.mu.mode = MuMode::none;
  p.penalty = false;
  p.floors.pres = 1e-300;
  ConservedField f = uniform_state(g, 1.0, Vec3{}, 1e-290, p.gamma);
  CHECK(stable_dt(f, g, p, 0.5) > 1e100);  // dt -> infinity as theta -> 0+

  StepController ctrl;
  ctrl.t_end = 3.0;
  const AdvanceResult r = advance(f, g, p, ctrl);
  CHECK(r.t == doctest::Approx(3.0));
  CHECK(r.steps == 1);  // one step straight to t_end
}

TEST_CASE("constant initial state stays constant") {
  const Grid g = grid_1d(8, BoundaryKind::wall);
  SchemeParams p;
  p.bc = BoundaryKind::wall;
  const ConservedField f0 = uniform_state(g, 1.0, Vec3{}, 1.0, p.gamma);
  StepController ctrl;
  ctrl.t_end = 0.5;
  const AdvanceResult r = advance(f0, g, p, ctrl);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    CHECK(r.state.rho[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(norm(r.state.mom[i]) < 1e-13);
    CHECK(r.state.ener[i] == doctest::Approx(2.5).epsilon(1e-14));
  }
  CHECK(r.total_retries == 0);
}

TEST_CASE("every integrator conserves total mass and energy to roundoff") {
  std::mt19937_64 rng(103);
  for (const Integrator integ : {Integrator::euler, Integrator::ssprk2, Integrator::ssprk3}) {
    const Grid g = grid_1d(32, BoundaryKind::periodic);
    SchemeParams p;
    const ConservedField f0 = random_state(g, p.gamma, rng, 0.2);
    const FieldTotals before = field_totals(f0, g, p.gamma);

    StepController ctrl;
    ctrl.integrator = integ;
    ctrl.t_end = 1e9;     // irrelevant, bounded by steps
    ctrl.max_steps = 50;
    const AdvanceResult r = advance(f0, g, p, ctrl);
    CHECK(r.steps == 50);
    const FieldTotals after = field_totals(r.state, g, p.gamma);
    CHECK(std::abs(after.mass - before.mass) <= 1e-13 * before.mass);
    CHECK(std::abs(after.energy - before.energy) <= 1e-13 * before.energy);
  }
}

TEST_CASE("hooks observe monotone time and cumulative retries") {
  const Grid g = grid_1d(16, BoundaryKind::periodic);
  SchemeParams p;
  std::mt19937_64 rng(107);
  const ConservedField f0 = random_state(g, p.gamma, rng, 0.2);

  StepController ctrl;
  ctrl.t_end = 0.05;
  double last_t = -1.0;
  std::int64_t calls = 0;
  const AdvanceResult r = advance(f0, g, p, ctrl, [&](double t, const ConservedField& s,
                                                      const StepStats& st) {
    CHECK(t > last_t);
    last_t = t;
    CHECK(s.size() == f0.size());
    CHECK(st.total_retries >= 0);
    ++calls;
  });
  CHECK(calls == r.steps + 1);  // initial sample plus one per accepted step
  CHECK(last_t == doctest::Approx(0.05));
}

TEST_CASE("admissibility violations retry with halved dt and eventually throw") {
  // A state engineered to fail: huge velocity contrast at near-vacuum
  // pressure makes the first forward-Euler stage inadmissible at CFL 1.
  const Grid g = grid_1d(4, BoundaryKind::periodic);
  SchemeParams p;
  p.mu.mode = MuMode::none;
  p.penalty = false;

  ConservedField f(4);
  f.rho = {1.0, 1e-6, 1.0, 1.0};
  f.mom = {Vec3{5.0, 0, 0}, Vec3{-5e-6, 0, 0}, Vec3{-5.0, 0, 0}, Vec3{5.0, 0, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec3 u = (1.0 / f.rho[i]) * f.mom[i];
    f.ener[i] = total_energy(f.rho[i], u, 2e-6, p.gamma);
  }
  REQUIRE_FALSE(find_inadmissible(f, p.gamma, p.floors).has_value());

  StepController ctrl;
  ctrl.cfl = 1.0;
  ctrl.t_end = 1.0;
  ctrl.max_retries = 0;  // no retries allowed: must throw at the first failure
  bool threw = false;
  try {
    advance(f, g, p, ctrl);
  } catch (const AdmissibilityError& e) {
    threw = true;
    CHECK(e.violation().cell >= 0);
    CHECK((e.violation().field == "rho" || e.violation().field == "pres"));
  }
  CHECK(threw);

  // With retries permitted the same step succeeds on a smaller dt.
  ctrl.max_retries = 40;
  ctrl.t_end = 1e-4;
  const AdvanceResult r = advance(f, g, p, ctrl);
  CHECK(r.t == doctest::Approx(1e-4));
}

TEST_CASE("non-finite states are reported as such") {
  const Grid g = grid_1d(4, BoundaryKind::periodic);
  SchemeParams p;
  ConservedField f = uniform_state(g, 1.0, Vec3{}, 1.0, p.gamma);
  f.ener[1] = std::numeric_limits<double>::quiet_NaN();
  const auto v = find_inadmissible(f, p.gamma, p.floors);
  REQUIRE(v.has_value());
  CHECK(v->field == "nonfinite");
}

TEST_CASE("trajectories are deterministic across thread counts") {
  std::mt19937_64 rng(109);
  const Grid g = grid_1d(64, BoundaryKind::wall);
  SchemeParams p;
  p.bc = BoundaryKind::wall;
  const ConservedField f0 = random_state(g, p.gamma, rng, 0.2);

  StepController ctrl;
  ctrl.t_end = 1e9;
  ctrl.max_steps = 25;

  const AdvanceResult serial = advance(f0, g, p, ctrl);
  ThreadPool pool(4);
  const AdvanceResult parallel = advance(f0, g, p, ctrl, {}, &pool);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    CHECK(serial.state.rho[i] == parallel.state.rho[i]);
    CHECK(serial.state.mom[i] == parallel.state.mom[i]);
    CHECK(serial.state.ener[i] == parallel.state.ener[i]);
  }
}

TEST_CASE("pressure keeps its minimum-entropy lower bound along trajectories") {
  // With s0 the initial minimum entropy, p >= exp((gamma-1) s0) rho^gamma
  // must hold at all later times.
  const Grid g = grid_1d(100, BoundaryKind::wall);
  SchemeParams p;
  p.bc = BoundaryKind::wall;

  ConservedField f(100);
  const RiemannState left{1.0, 0.0, 1.0}, right{0.125, 0.0, 0.1};
  for (std::size_t i = 0; i < 100; ++i) {
    const RiemannState s = (i < 50) ? left : right;
    f.rho[i] = s.rho;
    f.mom[i] = Vec3{s.rho * s.u, 0.0, 0.0};
    f.ener[i] = total_energy(s.rho, Vec3{s.u, 0.0, 0.0}, s.p, p.gamma);
  }
  const double s0 = field_totals(f, g, p.gamma).entropy_min;

  StepController ctrl;
  ctrl.t_end = 0.1;
  const AdvanceResult r = advance(f, g, p, ctrl);
  const PrimitiveField prim = primitive_from_conserved(r.state, p.gamma);
  const double coeff = std::exp((p.gamma - 1.0) * s0);
  for (std::size_t i = 0; i < r.state.size(); ++i) {
    CHECK(prim.pres[i] >= coeff * std::pow(r.state.rho[i], p.gamma) - 1e-9);
  }
}
