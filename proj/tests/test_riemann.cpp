#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eulerfv/riemann.hpp"

using namespace eulerfv;

namespace {

// Independent bisection-only root finder for the star pressure, written
// against the textbook pressure function. Deliberately shares no code with
// the production solver.
double star_pressure_bisection(const RiemannState& l, const RiemannState& r, double gamma,
                               double tol) {
  const auto side = [gamma](const RiemannState& s, double p) {
    const double c = std::sqrt(gamma * s.p / s.rho);
    if (p > s.p) {
      const double a = 2.0 / ((gamma + 1.0) * s.rho);
      const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
      return (p - s.p) * std::sqrt(a / (p + b));
    }
    return 2.0 * c / (gamma - 1.0) * (std::pow(p / s.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  };
  const auto f = [&](double p) { return side(l, p) + side(r, p) + (r.u - l.u); };

  double lo = 1e-12, hi = 10.0 * std::max(l.p, r.p);
  while (f(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
    if (std::abs(f(mid)) <= tol && hi - lo <= tol) return mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("equal states return the constant state exactly") {
  const RiemannState s{1.3, 0.4, 0.9};
  const RiemannSolution sol = solve_riemann(s, s, 1.4);
  CHECK(sol.p_star() == s.p);
  CHECK(sol.u_star() == s.u);
  for (const double xi : {-10.0, -0.5, 0.0, 0.4, 2.0, 10.0}) {
    CHECK(sol.sample(xi) == s);
  }
}

TEST_CASE("Sod star pressure matches the bisection-only oracle") {
  const RiemannState l{1.0, 0.0, 1.0};
  const RiemannState r{0.125, 0.0, 0.1};
  const RiemannSolution sol = solve_riemann(l, r, 1.4, 1e-12);
  const double p_bis = star_pressure_bisection(l, r, 1.4, 1e-13);

  CHECK(std::abs(sol.p_star() - p_bis) <= 1e-10);
  // Textbook value for the Sod tube.
  CHECK(sol.p_star() == doctest::Approx(0.30313).epsilon(2e-5));
  CHECK(sol.u_star() == doctest::Approx(0.92745).epsilon(2e-5));
}

TEST_CASE("Sod wave structure at t > 0") {
  const RiemannSolution sol = solve_riemann({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4);

  // Far field returns the data.
  CHECK(sol.sample(-10.0) == RiemannState{1.0, 0.0, 1.0});
  CHECK(sol.sample(10.0) == RiemannState{0.125, 0.0, 0.1});

  // Left of the contact: isentropic star density from the rarefaction.
  const RiemannState left_star = sol.sample(sol.u_star() - 1e-9);
  CHECK(left_star.rho == doctest::Approx(std::pow(sol.p_star() / 1.0, 1.0 / 1.4)).epsilon(1e-6));
  // Right of the contact: shocked density exceeds the data density.
  const RiemannState right_star = sol.sample(sol.u_star() + 1e-9);
  CHECK(right_star.rho > 0.125);
  CHECK(right_star.p == doctest::Approx(sol.p_star()));
  // Pressure and velocity are continuous across the contact.
  CHECK(left_star.p == doctest::Approx(right_star.p));
  CHECK(left_star.u == doctest::Approx(right_star.u));
}

TEST_CASE("symmetric expansion has u_star = 0") {
  const RiemannState l{1.0, -0.2, 1.0};
  const RiemannState r{1.0, 0.2, 1.0};
  const RiemannSolution sol = solve_riemann(l, r, 1.4);
  CHECK(std::abs(sol.u_star()) < 1e-12);
  CHECK(sol.p_star() < 1.0);  // expansion lowers the pressure

  // Mirror symmetry of the sampled solution.
  for (const double xi : {0.1, 0.3, 0.7, 1.1}) {
    const RiemannState a = sol.sample(xi);
    const RiemannState b = sol.sample(-xi);
    CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-10));
    CHECK(a.u == doctest::Approx(-b.u).epsilon(1e-10));
    CHECK(a.p == doctest::Approx(b.p).epsilon(1e-10));
  }
}

TEST_CASE("strong collision produces two shocks") {
  const RiemannState l{1.0, 2.0, 1.0};
  const RiemannState r{1.0, -2.0, 1.0};
  const RiemannSolution sol = solve_riemann(l, r, 1.4);
  CHECK(sol.p_star() > 1.0);
  CHECK(std::abs(sol.u_star()) < 1e-12);
  // The sampled center state is the star state.
  const RiemannState mid = sol.sample(0.0);
  CHECK(mid.p == doctest::Approx(sol.p_star()));
}

TEST_CASE("pressure equation residual meets the stated tolerance") {
  // |f_L + f_R + du| at the returned star pressure, recomputed independently.
  const RiemannState l{1.0, 0.0, 1.0};
  const RiemannState r{0.125, 0.0, 0.1};
  const double gamma = 1.4;
  const RiemannSolution sol = solve_riemann(l, r, gamma, 1e-12);

  const auto side = [gamma](const RiemannState& s, double p) {
    const double c = std::sqrt(gamma * s.p / s.rho);
    if (p > s.p) {
      const double a = 2.0 / ((gamma + 1.0) * s.rho);
      const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
      return (p - s.p) * std::sqrt(a / (p + b));
    }
    return 2.0 * c / (gamma - 1.0) * (std::pow(p / s.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  };
  const double resid = side(l, sol.p_star()) + side(r, sol.p_star()) + (r.u - l.u);
  CHECK(std::abs(resid) <= 1e-12);
}

TEST_CASE("vacuum-generating data is rejected") {
  const RiemannState l{1.0, -10.0, 0.01};
  const RiemannState r{1.0, 10.0, 0.01};
  CHECK_THROWS_AS(solve_riemann(l, r, 1.4), VacuumError);
  CHECK_THROWS_AS(solve_riemann({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, 1.4), std::invalid_argument);
}
