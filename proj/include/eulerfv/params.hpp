#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerfv {

enum class BoundaryKind { periodic, wall };

/// Face diffusion coefficient mu = h * M(...).
enum class MuMode {
  none,            // mu = 0 (admissible on uniform cubic meshes only)
  power,           // mu = c * h^beta, 0 <= beta < 1
  lax_friedrichs,  // mu = max wave-speed estimate per face
};

struct MuSpec {
  MuMode mode = MuMode::power;
  double c = 1.0;
  double beta = 0.5;

  friend bool operator==(const MuSpec&, const MuSpec&) = default;
};

/// Strict admissibility thresholds. Violations are errors, never clipped.
struct AdmissibilityFloors {
  double rho = 1e-12;
  double pres = 1e-12;

  friend bool operator==(const AdmissibilityFloors&, const AdmissibilityFloors&) = default;
};

struct SchemeParams {
  double gamma = 1.4;
  double alpha = 1.0;    // velocity-penalty exponent, must lie in (0, 4/3)
  bool penalty = true;   // h^(alpha-1) [[u]] terms on/off
  MuSpec mu{};
  double cfl = 0.3;
  BoundaryKind bc = BoundaryKind::periodic;
  AdmissibilityFloors floors{};

  double c_v() const { return 1.0 / (gamma - 1.0); }

  /// Coefficient of the velocity-jump penalty terms.
  double penalty_coefficient(double h) const {
    return penalty ? std::pow(h, alpha - 1.0) : 0.0;
  }

  void validate() const {
    if (!(gamma > 1.0))
      throw std::invalid_argument("gamma must be > 1");
    if (!(alpha > 0.0 && alpha < 4.0 / 3.0))
      throw std::invalid_argument("alpha must lie in (0, 4/3)");
    if (mu.mode == MuMode::power) {
      if (!(mu.c > 0.0))
        throw std::invalid_argument("mu_c must be > 0 in power mode");
      if (!(mu.beta >= 0.0 && mu.beta < 1.0))
        throw std::invalid_argument("beta must lie in [0, 1)");
    }
    if (!(cfl > 0.0 && cfl <= 1.0))
      throw std::invalid_argument("cfl must lie in (0, 1]");
    if (!(floors.rho > 0.0 && floors.pres > 0.0))
      throw std::invalid_argument("admissibility floors must be positive");
  }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

}  // namespace eulerfv
