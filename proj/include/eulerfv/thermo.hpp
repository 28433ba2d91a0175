#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "eulerfv/field.hpp"
#include "eulerfv/params.hpp"

namespace eulerfv {

struct AdmissibilityViolation {
  std::int64_t cell = -1;
  std::string field;  // "rho" | "pres" | "nonfinite"
  double value = 0.0;
};

class AdmissibilityError : public std::runtime_error {
 public:
  explicit AdmissibilityError(const AdmissibilityViolation& v)
      : std::runtime_error("inadmissible state: " + v.field + " = " + std::to_string(v.value) +
                           " at cell " + std::to_string(v.cell)),
        violation_(v) {}

  const AdmissibilityViolation& violation() const { return violation_; }

 private:
  AdmissibilityViolation violation_;
};

inline double pressure(double rho, const Vec3& mom, double ener, double gamma) {
  return (gamma - 1.0) * (ener - 0.5 * squared_norm(mom) / rho);
}

inline double pressure(const CellState& s, double gamma) {
  return pressure(s.rho, s.mom, s.ener, gamma);
}

inline double temperature(double rho, const Vec3& mom, double ener, double gamma) {
  return pressure(rho, mom, ener, gamma) / rho;
}

/// Physical entropy s = log(theta^c_v / rho) = c_v log theta - log rho.
double entropy(double rho, double theta, double gamma);

/// Same entropy through the (rho, p) chart: s = 1/(gamma-1) log(p / rho^gamma).
double entropy_from_pressure(double rho, double pres, double gamma);

double speed_of_sound(double theta, double gamma);

/// Total energy from primitive data.
inline double total_energy(double rho, const Vec3& vel, double pres, double gamma) {
  return pres / (gamma - 1.0) + 0.5 * rho * squared_norm(vel);
}

/// First violating cell, if any, scanning in cell order. NaN/inf counts as a violation.
std::optional<AdmissibilityViolation> find_inadmissible(const ConservedField& cons, double gamma,
                                                        const AdmissibilityFloors& floors = {});

/// Componentwise conversion; throws AdmissibilityError at the first offending cell.
PrimitiveField primitive_from_conserved(const ConservedField& cons, double gamma,
                                        const AdmissibilityFloors& floors = {});

/// In-place variant reusing the output buffers (hot path). with_entropy =
/// false skips the per-cell logs; entr is left unspecified then.
void primitive_from_conserved(const ConservedField& cons, double gamma,
                              const AdmissibilityFloors& floors, PrimitiveField& out,
                              bool with_entropy = true);

ConservedField conserved_from_primitive(const std::vector<double>& rho,
                                        const std::vector<Vec3>& vel,
                                        const std::vector<double>& pres, double gamma);

/// Renormalized-entropy cut-off chi: non-decreasing, concave, bounded above.
///
/// Presets cover the two functions the analysis relies on: the cap
/// min(s, 1/eps) and the negative part min(s - s0, 0). Both are kinked;
/// a positive smoothing width replaces the kink by a C^1 quadratic blend
/// (chain-rule identity evaluations need a genuine derivative, monitors
/// use the exact kinked form with width 0).
class ChiSpec {
 public:
  static ChiSpec cap(double eps, double smooth_width = 0.0) {
    if (!(eps > 0.0)) throw std::invalid_argument("chi cap: eps must be > 0");
    ChiSpec c;
    c.kind_ = Kind::cap;
    c.ref_ = 1.0 / eps;
    c.width_ = smooth_width;
    return c;
  }

  static ChiSpec negative_part(double s0, double smooth_width = 0.0) {
    ChiSpec c;
    c.kind_ = Kind::negative_part;
    c.ref_ = s0;
    c.width_ = smooth_width;
    return c;
  }

  /// chi(s) = s. Unbounded above: usable for reporting, excluded from
  /// the sign-guaranteed checks.
  static ChiSpec identity() {
    ChiSpec c;
    c.kind_ = Kind::identity;
    return c;
  }

  /// User-supplied chi; concavity/monotonicity are the caller's declaration,
  /// not checked here.
  static ChiSpec custom(std::function<double(double)> value, std::function<double(double)> slope,
                        bool bounded) {
    ChiSpec c;
    c.kind_ = Kind::custom;
    c.fn_ = std::move(value);
    c.dfn_ = std::move(slope);
    c.custom_bounded_ = bounded;
    return c;
  }

  double value(double s) const;
  double slope(double s) const;
  bool bounded_above() const {
    if (kind_ == Kind::identity) return false;
    if (kind_ == Kind::custom) return custom_bounded_;
    return true;
  }

 private:
  enum class Kind { cap, negative_part, identity, custom };
  Kind kind_ = Kind::identity;
  double ref_ = 0.0;
  double width_ = 0.0;
  std::function<double(double)> fn_;
  std::function<double(double)> dfn_;
  bool custom_bounded_ = false;
};

/// Renormalization function b for the continuity equation.
class BSpec {
 public:
  static BSpec rho_log_rho() {
    BSpec b;
    b.kind_ = Kind::rho_log_rho;
    return b;
  }

  /// b(rho) = min(rho - rho_lo, 0); smoothed when width > 0.
  static BSpec negative_part(double rho_lo, double smooth_width = 0.0) {
    BSpec b;
    b.kind_ = Kind::negative_part;
    b.ref_ = rho_lo;
    b.width_ = smooth_width;
    return b;
  }

  /// b(rho) = rho: collapses the renormalized continuity balance back to
  /// the plain scheme.
  static BSpec linear() {
    BSpec b;
    b.kind_ = Kind::linear;
    return b;
  }

  double value(double rho) const;
  double slope(double rho) const;

 private:
  enum class Kind { rho_log_rho, negative_part, linear };
  Kind kind_ = Kind::rho_log_rho;
  double ref_ = 0.0;
  double width_ = 0.0;
};

/// chi(s) evaluated through a preset; the operation named in the interface.
inline double renormalized_entropy(double s, const ChiSpec& chi) { return chi.value(s); }

}  // namespace eulerfv
