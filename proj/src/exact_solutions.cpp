#include "eulerfv/exact_solutions.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "eulerfv/thermo.hpp"

namespace eulerfv {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap(double x, double lo, double len) {
  double y = std::fmod(x - lo, len);
  if (y < 0.0) y += len;
  return lo + y;
}

}  // namespace

ExactSolution contact_advection_solution(double x_lo, double length, double amplitude) {
  ExactSolution sol;
  sol.name = "contact_advection";
  sol.dim = 1;
  sol.smooth = true;
  sol.eval = [x_lo, length, amplitude](double t, const Vec3& x) {
    const double xi = wrap(x[0] - t, x_lo, length);
    PrimitiveSample s;
    s.rho = 1.0 + amplitude * std::sin(2.0 * kPi * (xi - x_lo) / length);
    s.vel = Vec3{1.0, 0.0, 0.0};
    s.pres = 1.0;
    return s;
  };
  return sol;
}

ExactSolution isentropic_vortex_solution(double gamma, const Vec3& box_lo, const Vec3& box_len,
                                         double beta, double radius) {
  ExactSolution sol;
  sol.name = "isentropic_vortex";
  sol.dim = 2;
  sol.smooth = true;
  const Vec3 mean{1.0, 1.0, 0.0};
  const Vec3 center{box_lo[0] + 0.5 * box_len[0], box_lo[1] + 0.5 * box_len[1], 0.0};
  sol.eval = [=](double t, const Vec3& x) {
    const double xi = (wrap(x[0] - mean[0] * t - center[0] + 0.5 * box_len[0], 0.0, box_len[0]) -
                       0.5 * box_len[0]) /
                      radius;
    const double eta = (wrap(x[1] - mean[1] * t - center[1] + 0.5 * box_len[1], 0.0, box_len[1]) -
                        0.5 * box_len[1]) /
                       radius;
    const double r2 = xi * xi + eta * eta;
    const double gauss = std::exp(0.5 * (1.0 - r2));
    const double du = beta / (2.0 * kPi);
    PrimitiveSample s;
    const double temp = 1.0 - (gamma - 1.0) * beta * beta / (8.0 * gamma * kPi * kPi) *
                                  std::exp(1.0 - r2);
    s.rho = std::pow(temp, 1.0 / (gamma - 1.0));
    s.vel = mean + Vec3{-du * eta * gauss, du * xi * gauss, 0.0};
    s.pres = s.rho * temp;
    return s;
  };
  return sol;
}

ExactSolution riemann_exact_solution(const RiemannState& left, const RiemannState& right,
                                     double gamma, double x0) {
  ExactSolution sol;
  sol.name = "sod_riemann";
  sol.dim = 1;
  sol.smooth = false;
  auto solution = std::make_shared<RiemannSolution>(solve_riemann(left, right, gamma));
  sol.eval = [solution, x0, left](double t, const Vec3& x) {
    const RiemannState r =
        t > 0.0 ? solution->sample((x[0] - x0) / t)
                : (x[0] < x0 ? left : solution->sample(std::numeric_limits<double>::infinity()));
    return PrimitiveSample{r.rho, Vec3{r.u, 0.0, 0.0}, r.p};
  };
  return sol;
}

ExactSolution uniform_solution(int dim, double rho, const Vec3& vel, double pres) {
  ExactSolution sol;
  sol.name = "uniform";
  sol.dim = dim;
  sol.smooth = true;
  sol.eval = [rho, vel, pres](double, const Vec3&) { return PrimitiveSample{rho, vel, pres}; };
  return sol;
}

namespace {

struct Conserved {
  double rho;
  Vec3 mom;
  double ener;
};

Conserved conserved_at(const ExactSolution& sol, double gamma, double t, const Vec3& x) {
  const PrimitiveSample s = sol.eval(t, x);
  return {s.rho, s.rho * s.vel, total_energy(s.rho, s.vel, s.pres, gamma)};
}

// Flux of the Euler system along one axis.
void flux_at(const ExactSolution& sol, double gamma, double t, const Vec3& x, int axis,
             double out[5]) {
  const PrimitiveSample s = sol.eval(t, x);
  const double un = s.vel[axis];
  const double E = total_energy(s.rho, s.vel, s.pres, gamma);
  out[0] = s.rho * un;
  for (int c = 0; c < 3; ++c) out[1 + c] = s.rho * s.vel[c] * un + (c == axis ? s.pres : 0.0);
  out[4] = (E + s.pres) * un;
}

}  // namespace

double euler_residual_fd(const ExactSolution& sol, double gamma, double t, const Vec3& x,
                         double delta) {
  // Fourth-order central differences: f' ~ (-f(+2d) + 8f(+d) - 8f(-d) + f(-2d)) / 12d.
  const auto d4 = [delta](const double f[4]) {
    return (-f[3] + 8.0 * f[2] - 8.0 * f[1] + f[0]) / (12.0 * delta);
  };

  double resid[5] = {0, 0, 0, 0, 0};

  {
    double q[4][5];
    const double offs[4] = {-2.0 * delta, -delta, delta, 2.0 * delta};
    for (int k = 0; k < 4; ++k) {
      const Conserved c = conserved_at(sol, gamma, t + offs[k], x);
      q[k][0] = c.rho;
      for (int a = 0; a < 3; ++a) q[k][1 + a] = c.mom[a];
      q[k][4] = c.ener;
    }
    for (int e = 0; e < 5; ++e) {
      const double f[4] = {q[0][e], q[1][e], q[2][e], q[3][e]};
      resid[e] += d4(f);
    }
  }

  for (int axis = 0; axis < sol.dim; ++axis) {
    double q[4][5];
    const double offs[4] = {-2.0 * delta, -delta, delta, 2.0 * delta};
    for (int k = 0; k < 4; ++k) {
      Vec3 xs = x;
      xs[axis] += offs[k];
      flux_at(sol, gamma, t, xs, axis, q[k]);
    }
    for (int e = 0; e < 5; ++e) {
      const double f[4] = {q[0][e], q[1][e], q[2][e], q[3][e]};
      resid[e] += d4(f);
    }
  }

  double worst = 0.0;
  for (int e = 0; e < 5; ++e) worst = std::max(worst, std::abs(resid[e]));
  return worst;
}

double max_euler_residual(const ExactSolution& sol, double gamma, const Vec3& box_lo,
                          const Vec3& box_len, int n_samples, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.3, 0.7);
  std::uniform_real_distribution<double> time(0.0, 0.02);
  const double delta = 2.5e-4;
  double worst = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    Vec3 x;
    for (int a = 0; a < sol.dim; ++a) x[a] = box_lo[a] + unit(rng) * box_len[a];
    worst = std::max(worst, euler_residual_fd(sol, gamma, time(rng), x, delta));
  }
  return worst;
}

}  // namespace eulerfv
