#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "eulerfv/scheme.hpp"

namespace eulerfv {

/// Chain-rule rates of derived per-cell quantities, obtained by
/// differentiating the composites through a Residual. The semi-discrete
/// balance identities hold exactly in continuous time, so every identity
/// check below is instantaneous: no time stepping, no discretization error.
struct ChainRates {
  std::vector<Vec3> dvel;
  std::vector<double> dpres;
  std::vector<double> dtemp;
  std::vector<double> dentr;
};

ChainRates chain_rates(const ConservedField& cons, const PrimitiveField& prim,
                       const Residual& res, double gamma);

/// Defect of the discrete kinetic energy balance: d/dt of 1/2 rho|u|^2
/// tested against phi minus its upwind flux and the penalty, pressure-work,
/// mu-diffusion and upwind-dissipation face terms. Zero to roundoff for any
/// admissible state and any piecewise-constant phi.
DefectResult kinetic_balance_defect(const ConservedField& cons, const Grid& grid,
                                    const SchemeParams& params, std::span<const double> phi);

/// Defect of the discrete internal energy balance (total energy minus
/// kinetic). Together with the kinetic balance it reassembles the energy
/// weak form exactly; see energy_split_crosscheck.
DefectResult internal_balance_defect(const ConservedField& cons, const Grid& grid,
                                     const SchemeParams& params, std::span<const double> phi);

/// Defect of the renormalized continuity balance for a C^1 function b.
DefectResult renormalized_continuity_defect(const ConservedField& cons, const Grid& grid,
                                            const SchemeParams& params, const BSpec& b,
                                            std::span<const double> phi);

/// Pure face-sum recombination check: kinetic + internal balances against
/// the energy weak form. No time derivatives involved.
DefectResult energy_split_crosscheck(const ConservedField& cons, const Grid& grid,
                                     const SchemeParams& params, std::span<const double> phi);

/// One named entropy production term of the renormalized entropy balance.
/// Every term is nonnegative for phi >= 0 and an admissible chi.
struct ProductionTerm {
  std::string name;
  double value = 0.0;
};

/// Renormalized entropy balance evaluated term by term:
///   ddt == flux + sum(production) up to roundoff (the defect),
/// where flux telescopes for phi == 1, making the entropy rate a sum of
/// signed production terms.
struct EntropyBalance {
  double ddt = 0.0;   // d/dt integral of rho chi(s) phi
  double flux = 0.0;  // numerical entropy flux paired with [[phi]]
  std::array<ProductionTerm, 7> production{};
  double production_total = 0.0;
  double min_production = 0.0;
  double defect = 0.0;
  double scale = 0.0;
};

EntropyBalance entropy_balance_report(const ConservedField& cons, const Grid& grid,
                                      const SchemeParams& params, const ChiSpec& chi,
                                      std::span<const double> phi);

/// d/dt of the total renormalized entropy (phi == 1), by chain rule.
double entropy_rate(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
                    const ChiSpec& chi);

struct FieldTotals {
  double mass = 0.0;
  double energy = 0.0;
  double entropy_total = 0.0;  // integral of rho s (physical entropy)
  double entropy_min = 0.0;    // min over cells of s
};

FieldTotals field_totals(const ConservedField& cons, const Grid& grid, double gamma);

double renormalized_entropy_total(const ConservedField& cons, const Grid& grid, double gamma,
                                  const ChiSpec& chi);

/// Instantaneous face sums of the weak-BV integrands, over interior faces:
///   u2:     h^(alpha-1) sum |sigma| [[u]]^2
///   rho2:   sum |sigma| lambda [[rho]]^2,   lambda = |u_bar.n| + mu
///   theta2: sum |sigma| lambda [[theta]]^2
struct BvRates {
  double u2 = 0.0;
  double rho2 = 0.0;
  double theta2 = 0.0;
};

BvRates weak_bv_rates(const ConservedField& cons, const Grid& grid, const SchemeParams& params);

struct WeakBvIntegrals {
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

/// Trapezoidal time quadrature of BvRates samples.
class BvAccumulator {
 public:
  void sample(double t, const BvRates& r) {
    if (has_prev_) {
      const double w = 0.5 * (t - t_prev_);
      total_.b1 += w * (prev_.u2 + r.u2);
      total_.b2 += w * (prev_.rho2 + r.rho2);
      total_.b3 += w * (prev_.theta2 + r.theta2);
    }
    t_prev_ = t;
    prev_ = r;
    has_prev_ = true;
  }

  const WeakBvIntegrals& totals() const { return total_; }

 private:
  bool has_prev_ = false;
  double t_prev_ = 0.0;
  BvRates prev_{};
  WeakBvIntegrals total_{};
};

/// Conservation drifts and the signed minimum-entropy violation across
/// trajectory samples.
struct ConservationReport {
  double mass_drift_rel = 0.0;    // max |M(t) - M0| / M0
  double energy_drift_rel = 0.0;  // max |E(t) - E0| / E0
  double min_entropy_drift = 0.0; // min_t min_K s(t) - min_K s(0)
};

class ConservationTracker {
 public:
  void sample(const FieldTotals& t) {
    if (!has_first_) {
      first_ = t;
      worst_min_s_ = t.entropy_min;
      has_first_ = true;
      return;
    }
    report_.mass_drift_rel =
        std::max(report_.mass_drift_rel, std::abs(t.mass - first_.mass) / std::abs(first_.mass));
    report_.energy_drift_rel = std::max(report_.energy_drift_rel,
                                        std::abs(t.energy - first_.energy) / std::abs(first_.energy));
    worst_min_s_ = std::min(worst_min_s_, t.entropy_min);
    report_.min_entropy_drift = worst_min_s_ - first_.entropy_min;
  }

  const ConservationReport& report() const { return report_; }

 private:
  bool has_first_ = false;
  FieldTotals first_{};
  double worst_min_s_ = 0.0;
  ConservationReport report_{};
};

/// One diagnostics sample: conserved totals, entropy monitors, and the
/// instantaneous weak-BV rates (the harness integrates them in time).
struct BalanceReport {
  FieldTotals totals;
  double entropy_rate = 0.0;  // physical entropy, d/dt integral of rho s
  BvRates bv{};
};

BalanceReport make_balance_report(const ConservedField& cons, const Grid& grid,
                                  const SchemeParams& params);

}  // namespace eulerfv
