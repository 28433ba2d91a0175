#pragma once

#include <functional>
#include <random>
#include <string>

#include "eulerfv/riemann.hpp"
#include "eulerfv/vec.hpp"

namespace eulerfv {

struct PrimitiveSample {
  double rho = 0.0;
  Vec3 vel{};
  double pres = 0.0;
};

/// Analytic reference solution, sampled pointwise as primitive state.
struct ExactSolution {
  std::string name;
  int dim = 1;
  bool smooth = false;  // smooth solutions admit the pointwise PDE-residual check
  std::function<PrimitiveSample(double t, const Vec3& x)> eval;
};

/// rho = 1 + amplitude sin(2 pi (x - t)/L), u = 1, p = 1: a translating
/// contact layer, exact for any gamma. Periodic in x with period L.
ExactSolution contact_advection_solution(double x_lo, double length, double amplitude);

/// Isentropic vortex of strength beta and core radius R riding a uniform
/// diagonal mean flow on a periodic box. Exact solution of the 2D Euler
/// system for any R (the classical vortex rescaled).
ExactSolution isentropic_vortex_solution(double gamma, const Vec3& box_lo, const Vec3& box_len,
                                         double beta, double radius);

/// Self-similar Riemann solution about x0 (1D).
ExactSolution riemann_exact_solution(const RiemannState& left, const RiemannState& right,
                                     double gamma, double x0);

ExactSolution uniform_solution(int dim, double rho, const Vec3& vel, double pres);

/// Max-norm Euler residual of a smooth solution at (t, x), via fourth-order
/// central finite differences of the conserved quantities and fluxes.
double euler_residual_fd(const ExactSolution& sol, double gamma, double t, const Vec3& x,
                         double delta);

/// Largest FD residual over random interior samples (away from periodic
/// seams); the setup self-test for smooth oracles.
double max_euler_residual(const ExactSolution& sol, double gamma, const Vec3& box_lo,
                          const Vec3& box_len, int n_samples, std::mt19937_64& rng);

}  // namespace eulerfv
