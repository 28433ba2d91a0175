#include "eulerfv/thermo.hpp"

#include <cmath>

namespace eulerfv {

double entropy(double rho, double theta, double gamma) {
  if (!(rho > 0.0)) throw std::domain_error("entropy: rho must be > 0");
  if (!(theta > 0.0)) throw std::domain_error("entropy: theta must be > 0");
  const double c_v = 1.0 / (gamma - 1.0);
  return c_v * std::log(theta) - std::log(rho);
}

double entropy_from_pressure(double rho, double pres, double gamma) {
  if (!(rho > 0.0)) throw std::domain_error("entropy: rho must be > 0");
  if (!(pres > 0.0)) throw std::domain_error("entropy: pres must be > 0");
  return std::log(pres / std::pow(rho, gamma)) / (gamma - 1.0);
}

double speed_of_sound(double theta, double gamma) {
  if (!(theta > 0.0)) throw std::domain_error("speed_of_sound: theta must be > 0");
  return std::sqrt(gamma * theta);
}

std::optional<AdmissibilityViolation> find_inadmissible(const ConservedField& cons, double gamma,
                                                        const AdmissibilityFloors& floors) {
  const std::size_t n = cons.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = cons.rho[i];
    if (!std::isfinite(r) || !std::isfinite(cons.ener[i]) || !std::isfinite(cons.mom[i][0]) ||
        !std::isfinite(cons.mom[i][1]) || !std::isfinite(cons.mom[i][2])) {
      return AdmissibilityViolation{static_cast<std::int64_t>(i), "nonfinite", r};
    }
    if (!(r >= floors.rho)) {
      return AdmissibilityViolation{static_cast<std::int64_t>(i), "rho", r};
    }
    const double p = pressure(r, cons.mom[i], cons.ener[i], gamma);
    if (!(p >= floors.pres)) {
      return AdmissibilityViolation{static_cast<std::int64_t>(i), "pres", p};
    }
  }
  return std::nullopt;
}

void primitive_from_conserved(const ConservedField& cons, double gamma,
                              const AdmissibilityFloors& floors, PrimitiveField& out,
                              bool with_entropy) {
  const std::size_t n = cons.size();
  out.resize(n);
  const double c_v = 1.0 / (gamma - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = cons.rho[i];
    if (!(r >= floors.rho) || !std::isfinite(r)) {
      throw AdmissibilityError({static_cast<std::int64_t>(i),
                                std::isfinite(r) ? "rho" : "nonfinite", r});
    }
    const Vec3 u = (1.0 / r) * cons.mom[i];
    const double p = (gamma - 1.0) * (cons.ener[i] - 0.5 * dot(cons.mom[i], u));
    if (!(p >= floors.pres) || !std::isfinite(p)) {
      throw AdmissibilityError({static_cast<std::int64_t>(i),
                                std::isfinite(p) ? "pres" : "nonfinite", p});
    }
    const double theta = p / r;
    out.vel[i] = u;
    out.pres[i] = p;
    out.temp[i] = theta;
    if (with_entropy) out.entr[i] = c_v * std::log(theta) - std::log(r);
  }
}

PrimitiveField primitive_from_conserved(const ConservedField& cons, double gamma,
                                        const AdmissibilityFloors& floors) {
  PrimitiveField out(cons.size());
  primitive_from_conserved(cons, gamma, floors, out);
  return out;
}

ConservedField conserved_from_primitive(const std::vector<double>& rho,
                                        const std::vector<Vec3>& vel,
                                        const std::vector<double>& pres, double gamma) {
  const std::size_t n = rho.size();
  ConservedField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.rho[i] = rho[i];
    out.mom[i] = rho[i] * vel[i];
    out.ener[i] = total_energy(rho[i], vel[i], pres[i], gamma);
  }
  return out;
}

namespace {

// min(y, 0) with an optional C^1 quadratic blend of half-width w around the kink.
double smooth_min0(double y, double w) {
  if (w <= 0.0) return std::min(y, 0.0);
  if (y <= -w) return y;
  if (y >= w) return 0.0;
  return y - (y + w) * (y + w) / (4.0 * w);
}

double smooth_min0_slope(double y, double w) {
  if (w <= 0.0) return y < 0.0 ? 1.0 : 0.0;
  if (y <= -w) return 1.0;
  if (y >= w) return 0.0;
  return 1.0 - (y + w) / (2.0 * w);
}

}  // namespace

double ChiSpec::value(double s) const {
  switch (kind_) {
    case Kind::cap:
      return ref_ + smooth_min0(s - ref_, width_);
    case Kind::negative_part:
      return smooth_min0(s - ref_, width_);
    case Kind::identity:
      return s;
    case Kind::custom:
      return fn_(s);
  }
  return s;
}

double ChiSpec::slope(double s) const {
  switch (kind_) {
    case Kind::cap:
    case Kind::negative_part:
      return smooth_min0_slope(s - ref_, width_);
    case Kind::identity:
      return 1.0;
    case Kind::custom:
      return dfn_(s);
  }
  return 1.0;
}

double BSpec::value(double rho) const {
  switch (kind_) {
    case Kind::rho_log_rho:
      return rho * std::log(rho);
    case Kind::negative_part:
      return smooth_min0(rho - ref_, width_);
    case Kind::linear:
      return rho;
  }
  return rho;
}

double BSpec::slope(double rho) const {
  switch (kind_) {
    case Kind::rho_log_rho:
      return std::log(rho) + 1.0;
    case Kind::negative_part:
      return smooth_min0_slope(rho - ref_, width_);
    case Kind::linear:
      return 1.0;
  }
  return 1.0;
}

}  // namespace eulerfv
