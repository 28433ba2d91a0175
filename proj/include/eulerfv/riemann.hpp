#pragma once

#include <stdexcept>

namespace eulerfv {

/// 1D primitive state for the Riemann problem.
struct RiemannState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;

  friend bool operator==(const RiemannState&, const RiemannState&) = default;
};

class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact self-similar solution of the polytropic Euler Riemann problem.
/// The star pressure comes from a Newton iteration on the standard pressure
/// function with a bisection safeguard, converged to `tol` on the pressure
/// equation itself.
class RiemannSolution {
 public:
  RiemannSolution(const RiemannState& left, const RiemannState& right, double gamma, double tol);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }

  /// Sample the solution at similarity coordinate xi = x/t.
  RiemannState sample(double xi) const;

 private:
  RiemannState left_, right_;
  double gamma_;
  double p_star_ = 0.0;
  double u_star_ = 0.0;
  bool trivial_ = false;  // left == right: the constant state everywhere
};

inline RiemannSolution solve_riemann(const RiemannState& left, const RiemannState& right,
                                     double gamma, double tol = 1e-12) {
  return RiemannSolution(left, right, gamma, tol);
}

}  // namespace eulerfv
