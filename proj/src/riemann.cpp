#include "eulerfv/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace eulerfv {

namespace {

// Contribution of one side to the pressure equation, and its p-derivative:
// shock branch for p > p_k, rarefaction branch otherwise.
struct SideFn {
  double rho, u, p, c, gamma;

  double value(double ps) const {
    if (ps > p) {
      const double a = 2.0 / ((gamma + 1.0) * rho);
      const double b = (gamma - 1.0) / (gamma + 1.0) * p;
      return (ps - p) * std::sqrt(a / (ps + b));
    }
    return 2.0 * c / (gamma - 1.0) * (std::pow(ps / p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  }

  double deriv(double ps) const {
    if (ps > p) {
      const double a = 2.0 / ((gamma + 1.0) * rho);
      const double b = (gamma - 1.0) / (gamma + 1.0) * p;
      const double q = std::sqrt(a / (ps + b));
      return q * (1.0 - 0.5 * (ps - p) / (ps + b));
    }
    return std::pow(ps / p, -(gamma + 1.0) / (2.0 * gamma)) / (rho * c);
  }
};

}  // namespace

RiemannSolution::RiemannSolution(const RiemannState& left, const RiemannState& right, double gamma,
                                 double tol)
    : left_(left), right_(right), gamma_(gamma) {
  if (!(left.rho > 0.0 && left.p > 0.0 && right.rho > 0.0 && right.p > 0.0))
    throw std::invalid_argument("riemann: states must have positive density and pressure");

  if (left == right) {
    trivial_ = true;
    p_star_ = left.p;
    u_star_ = left.u;
    return;
  }

  const double c_l = std::sqrt(gamma * left.p / left.rho);
  const double c_r = std::sqrt(gamma * right.p / right.rho);
  const double du = right.u - left.u;
  if (2.0 * (c_l + c_r) / (gamma - 1.0) <= du)
    throw VacuumError("riemann: initial states generate vacuum");

  const SideFn fl{left.rho, left.u, left.p, c_l, gamma};
  const SideFn fr{right.rho, right.u, right.p, c_r, gamma};
  const auto f = [&](double ps) { return fl.value(ps) + fr.value(ps) + du; };

  // Two-rarefaction guess, positive by construction below vacuum.
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double ps = std::pow((c_l + c_r - 0.5 * (gamma - 1.0) * du) /
                           (c_l / std::pow(left.p, z) + c_r / std::pow(right.p, z)),
                       1.0 / z);
  ps = std::max(ps, 1e-14 * std::min(left.p, right.p));

  // Bracket the root: f is increasing in p.
  double lo = 1e-14 * std::min(left.p, right.p);
  double hi = std::max({ps, left.p, right.p});
  while (f(hi) < 0.0) hi *= 2.0;

  for (int it = 0; it < 200; ++it) {
    const double fp = f(ps);
    if (std::abs(fp) <= tol) break;
    if (fp > 0.0) {
      hi = ps;
    } else {
      lo = ps;
    }
    const double dfdp = fl.deriv(ps) + fr.deriv(ps);
    double next = ps - fp / dfdp;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    ps = next;
  }
  p_star_ = ps;
  u_star_ = 0.5 * (left.u + right.u) + 0.5 * (fr.value(ps) - fl.value(ps));
}

RiemannState RiemannSolution::sample(double xi) const {
  if (trivial_) return left_;

  const double g = gamma_;
  const double gm1 = g - 1.0;
  const double gp1 = g + 1.0;

  if (xi <= u_star_) {
    // Left of the contact.
    const RiemannState& s = left_;
    const double c = std::sqrt(g * s.p / s.rho);
    if (p_star_ > s.p) {
      // Left shock.
      const double ratio = p_star_ / s.p;
      const double speed = s.u - c * std::sqrt(gp1 / (2.0 * g) * ratio + gm1 / (2.0 * g));
      if (xi <= speed) return s;
      const double rho_star = s.rho * (ratio + gm1 / gp1) / (gm1 / gp1 * ratio + 1.0);
      return {rho_star, u_star_, p_star_};
    }
    // Left rarefaction.
    const double head = s.u - c;
    if (xi <= head) return s;
    const double c_star = c * std::pow(p_star_ / s.p, gm1 / (2.0 * g));
    const double tail = u_star_ - c_star;
    if (xi >= tail) {
      const double rho_star = s.rho * std::pow(p_star_ / s.p, 1.0 / g);
      return {rho_star, u_star_, p_star_};
    }
    const double fac = 2.0 / gp1 + gm1 / (gp1 * c) * (s.u - xi);
    return {s.rho * std::pow(fac, 2.0 / gm1), 2.0 / gp1 * (c + 0.5 * gm1 * s.u + xi),
            s.p * std::pow(fac, 2.0 * g / gm1)};
  }

  // Right of the contact.
  const RiemannState& s = right_;
  const double c = std::sqrt(g * s.p / s.rho);
  if (p_star_ > s.p) {
    // Right shock.
    const double ratio = p_star_ / s.p;
    const double speed = s.u + c * std::sqrt(gp1 / (2.0 * g) * ratio + gm1 / (2.0 * g));
    if (xi >= speed) return s;
    const double rho_star = s.rho * (ratio + gm1 / gp1) / (gm1 / gp1 * ratio + 1.0);
    return {rho_star, u_star_, p_star_};
  }
  // Right rarefaction.
  const double head = s.u + c;
  if (xi >= head) return s;
  const double c_star = c * std::pow(p_star_ / s.p, gm1 / (2.0 * g));
  const double tail = u_star_ + c_star;
  if (xi <= tail) {
    const double rho_star = s.rho * std::pow(p_star_ / s.p, 1.0 / g);
    return {rho_star, u_star_, p_star_};
  }
  const double fac = 2.0 / gp1 - gm1 / (gp1 * c) * (s.u - xi);
  return {s.rho * std::pow(fac, 2.0 / gm1), 2.0 / gp1 * (-c + 0.5 * gm1 * s.u + xi),
          s.p * std::pow(fac, 2.0 * g / gm1)};
}

}  // namespace eulerfv
