#include "eulerfv/diagnostics.hpp"

#include <cmath>
#include <limits>

namespace eulerfv {

namespace {

// Down-side value of a two-sided composite, by the sign of un (un = 0 takes
// the "in" branch for the up side, hence "out" for the down side).
inline double down_value(const FaceTrace<double>& t, double un) {
  return un >= 0.0 ? t.out : t.in;
}

inline double up_value(const FaceTrace<double>& t, double un) {
  return un >= 0.0 ? t.in : t.out;
}

// Jump of the velocity normal component, [[u]].n.
inline double normal_jump(const FaceView& f) {
  return f.sign * (f.vel.out[f.axis] - f.vel.in[f.axis]);
}

inline FaceTrace<double> kinetic_trace(const FaceView& f) {
  return {0.5 * f.rho.in * squared_norm(f.vel.in), 0.5 * f.rho.out * squared_norm(f.vel.out)};
}

struct Accum {
  double value = 0.0;
  double scale = 0.0;
  void add(double term) {
    value += term;
    scale += std::abs(term);
  }
};

}  // namespace

ChainRates chain_rates(const ConservedField& cons, const PrimitiveField& prim,
                       const Residual& res, double gamma) {
  const std::size_t n = cons.size();
  ChainRates out;
  out.dvel.resize(n);
  out.dpres.resize(n);
  out.dtemp.resize(n);
  out.dentr.resize(n);
  const double c_v = 1.0 / (gamma - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = cons.rho[i];
    const Vec3 u = prim.vel[i];
    out.dvel[i] = (1.0 / r) * (res.d_mom[i] - res.d_rho[i] * u);
    out.dpres[i] =
        (gamma - 1.0) * (res.d_ener[i] - dot(u, res.d_mom[i]) + 0.5 * squared_norm(u) * res.d_rho[i]);
    out.dtemp[i] = (out.dpres[i] - prim.temp[i] * res.d_rho[i]) / r;
    out.dentr[i] = c_v * out.dtemp[i] / prim.temp[i] - res.d_rho[i] / r;
  }
  return out;
}

DefectResult kinetic_balance_defect(const ConservedField& cons, const Grid& grid,
                                    const SchemeParams& params, std::span<const double> phi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);

  const double vol = grid.cell_volume();
  const double area = grid.face_area();
  const double pen = params.penalty_coefficient(grid.h());

  Accum lhs, rhs_sum;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double dke = dot(prim.vel[i], res.d_mom[i]) -
                       0.5 * squared_norm(prim.vel[i]) * res.d_rho[i];
    lhs.add(vol * phi[i] * dke);
  }

  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<double> ph = phi_trace(f, phi);
    const Vec3 ju = jump(f.vel);

    lhs.add(-area * upwind(kinetic_trace(f), f.un) * jump(ph));

    // u phi and 1/2|u|^2 phi composites (test side zero on ghosts).
    const FaceTrace<Vec3> u_phi{ph.in * f.vel.in, ph.out * f.vel.out};
    const FaceTrace<double> ke_phi{0.5 * squared_norm(f.vel.in) * ph.in,
                                   0.5 * squared_norm(f.vel.out) * ph.out};
    const Vec3 j_uphi = jump(u_phi);

    rhs_sum.add(-area * pen * dot(ju, j_uphi));
    rhs_sum.add(area * avg(f.pres) * f.sign * j_uphi[f.axis]);
    rhs_sum.add(-area * f.mu * dot(jump(f.mom), j_uphi));
    rhs_sum.add(area * f.mu * jump(f.rho) * jump(ke_phi));
    rhs_sum.add(-area * 0.5 * down_value(ph, f.un) * up_value(f.rho, f.un) * std::abs(f.un) *
                squared_norm(ju));
  }
  return {lhs.value - rhs_sum.value, lhs.scale + rhs_sum.scale};
}

DefectResult internal_balance_defect(const ConservedField& cons, const Grid& grid,
                                     const SchemeParams& params, std::span<const double> phi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);

  const double vol = grid.cell_volume();
  const double area = grid.face_area();
  const double pen = params.penalty_coefficient(grid.h());
  const double c_v = params.c_v();

  Accum lhs, rhs_sum;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double d_rho_e = res.d_ener[i] - dot(prim.vel[i], res.d_mom[i]) +
                           0.5 * squared_norm(prim.vel[i]) * res.d_rho[i];
    lhs.add(vol * phi[i] * d_rho_e);
  }

  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<double> ph = phi_trace(f, phi);
    const Vec3 ju = jump(f.vel);
    const FaceTrace<double> rho_e{c_v * f.pres.in, c_v * f.pres.out};

    lhs.add(-area * (upwind(rho_e, f.un) - f.mu * jump(rho_e)) * jump(ph));

    const FaceTrace<double> p_phi{f.pres.in * ph.in, f.pres.out * ph.out};
    rhs_sum.add(area * pen * squared_norm(ju) * avg(ph));
    rhs_sum.add(area * 0.5 * down_value(ph, f.un) * up_value(f.rho, f.un) * std::abs(f.un) *
                squared_norm(ju));
    // Cross average (rho_in phi_out + rho_out phi_in)/2: the exact weight of
    // the mu velocity heating (= rho_bar phi_bar - [[rho]][[phi]]/4), still
    // nonnegative for phi >= 0.
    rhs_sum.add(area * f.mu * squared_norm(ju) * 0.5 *
                (f.rho.in * ph.out + f.rho.out * ph.in));
    rhs_sum.add(-area * avg(p_phi) * normal_jump(f));
  }
  return {lhs.value - rhs_sum.value, lhs.scale + rhs_sum.scale};
}

DefectResult renormalized_continuity_defect(const ConservedField& cons, const Grid& grid,
                                            const SchemeParams& params, const BSpec& b,
                                            std::span<const double> phi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);

  const double vol = grid.cell_volume();
  const double area = grid.face_area();

  Accum lhs, rhs_sum;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    lhs.add(vol * phi[i] * b.slope(cons.rho[i]) * res.d_rho[i]);
  }

  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<double> ph = phi_trace(f, phi);

    const FaceTrace<double> b_rho{b.value(f.rho.in), b.value(f.rho.out)};
    const FaceTrace<double> bp_rho{b.slope(f.rho.in), b.slope(f.rho.out)};

    lhs.add(-area * upwind(b_rho, f.un) * jump(ph));

    // (b - b' rho) phi composite.
    const FaceTrace<double> def_phi{(b_rho.in - bp_rho.in * f.rho.in) * ph.in,
                                    (b_rho.out - bp_rho.out * f.rho.out) * ph.out};
    lhs.add(area * f.un * jump(def_phi));

    const FaceTrace<double> bp_phi{bp_rho.in * ph.in, bp_rho.out * ph.out};
    rhs_sum.add(-area * f.mu * jump(f.rho) * jump(bp_phi));

    const double b_up = up_value(b_rho, f.un), b_dn = down_value(b_rho, f.un);
    const double r_up = up_value(f.rho, f.un), r_dn = down_value(f.rho, f.un);
    const double bregman = (b_up - b_dn) - b.slope(r_dn) * (r_up - r_dn);
    rhs_sum.add(-area * down_value(ph, f.un) * bregman * std::abs(f.un));
  }
  return {lhs.value - rhs_sum.value, lhs.scale + rhs_sum.scale};
}

DefectResult energy_split_crosscheck(const ConservedField& cons, const Grid& grid,
                                     const SchemeParams& params, std::span<const double> phi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);

  const double area = grid.face_area();
  const double pen = params.penalty_coefficient(grid.h());
  const double c_v = params.c_v();

  Accum lhs, rhs_sum;
  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<double> ph = phi_trace(f, phi);
    const Vec3 ju = jump(f.vel);
    const FaceTrace<Vec3> u_phi{ph.in * f.vel.in, ph.out * f.vel.out};
    const FaceTrace<double> ke_phi{0.5 * squared_norm(f.vel.in) * ph.in,
                                   0.5 * squared_norm(f.vel.out) * ph.out};
    const FaceTrace<double> p_phi{f.pres.in * ph.in, f.pres.out * ph.out};
    const FaceTrace<double> rho_e{c_v * f.pres.in, c_v * f.pres.out};
    const Vec3 j_uphi = jump(u_phi);

    // Kinetic-balance face terms.
    lhs.add(-area * pen * dot(ju, j_uphi));
    lhs.add(area * avg(f.pres) * f.sign * j_uphi[f.axis]);
    lhs.add(-area * f.mu * dot(jump(f.mom), j_uphi));
    lhs.add(area * f.mu * jump(f.rho) * jump(ke_phi));
    // Internal-balance face terms (the upwind dissipation cancels in the sum).
    lhs.add(-area * 0.5 * down_value(ph, f.un) * up_value(f.rho, f.un) * std::abs(f.un) *
            squared_norm(ju));
    lhs.add(area * pen * squared_norm(ju) * avg(ph));
    lhs.add(area * 0.5 * down_value(ph, f.un) * up_value(f.rho, f.un) * std::abs(f.un) *
            squared_norm(ju));
    lhs.add(area * f.mu * squared_norm(ju) * 0.5 * (f.rho.in * ph.out + f.rho.out * ph.in));
    lhs.add(-area * avg(p_phi) * normal_jump(f));
    lhs.add(-area * f.mu * jump(rho_e) * jump(ph));

    // Energy weak form, combined pressure term.
    rhs_sum.add(-area * f.mu * jump(f.ener) * jump(ph));
    const FaceTrace<double> u_n{f.sign * f.vel.in[f.axis], f.sign * f.vel.out[f.axis]};
    rhs_sum.add(area * energy_pressure_flux(f.pres, u_n) * jump(ph));
    rhs_sum.add(-area * pen * dot(ju, avg(f.vel)) * jump(ph));
  }
  return {lhs.value - rhs_sum.value, lhs.scale + rhs_sum.scale};
}

EntropyBalance entropy_balance_report(const ConservedField& cons, const Grid& grid,
                                      const SchemeParams& params, const ChiSpec& chi,
                                      std::span<const double> phi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);
  const ChainRates rates = chain_rates(cons, prim, res, params.gamma);

  const double vol = grid.cell_volume();
  const double area = grid.face_area();
  const double pen = params.penalty_coefficient(grid.h());
  const double c_v = params.c_v();

  EntropyBalance out;
  out.production = {ProductionTerm{"penalty_dissipation"},
                    ProductionTerm{"upwind_velocity_dissipation"},
                    ProductionTerm{"mu_velocity_dissipation"},
                    ProductionTerm{"density_upwind_convexity"},
                    ProductionTerm{"temperature_upwind_concavity"},
                    ProductionTerm{"chi_concavity"},
                    ProductionTerm{"mu_state_convexity"}};

  double scale = 0.0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double s = prim.entr[i];
    const double term =
        vol * phi[i] * (res.d_rho[i] * chi.value(s) + cons.rho[i] * chi.slope(s) * rates.dentr[i]);
    out.ddt += term;
    scale += std::abs(term);
  }

  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<double> ph = phi_trace(f, phi);
    const Vec3 ju = jump(f.vel);
    const double aun = std::abs(f.un);

    const FaceTrace<double> chi_s{chi.value(f.entr.in), chi.value(f.entr.out)};
    const FaceTrace<double> chi_p{chi.slope(f.entr.in), chi.slope(f.entr.out)};
    const FaceTrace<double> rho_chi{f.rho.in * chi_s.in, f.rho.out * chi_s.out};

    // Gradients of G(rho, p) = rho chi(s(rho, p)):
    //   dG/drho = chi(s) - (c_v + 1) chi'(s),  dG/dp = c_v chi'(s) / theta.
    const FaceTrace<double> g_rho{chi_s.in - (c_v + 1.0) * chi_p.in,
                                  chi_s.out - (c_v + 1.0) * chi_p.out};
    const FaceTrace<double> g_p{c_v * chi_p.in / f.temp.in, c_v * chi_p.out / f.temp.out};

    // Numerical entropy flux: upwind minus the mu-weighted gradient form,
    // mirroring F_h = Up - mu [[.]] on the conserved quantities.
    const double flux_term =
        area * (upwind(rho_chi, f.un) - f.mu * (avg(g_rho) * jump(f.rho) + avg(g_p) * jump(f.pres))) *
        jump(ph);
    out.flux += flux_term;
    scale += std::abs(flux_term);

    // chi'(s) phi / theta and chi'(s) phi composites.
    const FaceTrace<double> w_phi{chi_p.in * ph.in / f.temp.in, chi_p.out * ph.out / f.temp.out};
    const FaceTrace<double> cp_phi{chi_p.in * ph.in, chi_p.out * ph.out};

    const double rho_up = up_value(f.rho, f.un);
    const double ju2 = squared_norm(ju);

    out.production[0].value += area * pen * ju2 * avg(w_phi);
    out.production[1].value += area * 0.5 * down_value(w_phi, f.un) * rho_up * aun * ju2;
    out.production[2].value +=
        area * f.mu * ju2 * 0.5 * (f.rho.in * w_phi.out + f.rho.out * w_phi.in);

    // Bregman-type upwind terms; b(rho) = rho log rho is fixed by the balance.
    const double r_up = up_value(f.rho, f.un), r_dn = down_value(f.rho, f.un);
    const double b_breg =
        (r_up * std::log(r_up) - r_dn * std::log(r_dn)) - (std::log(r_dn) + 1.0) * (r_up - r_dn);
    out.production[3].value += area * down_value(cp_phi, f.un) * b_breg * aun;

    const double th_up = up_value(f.temp, f.un), th_dn = down_value(f.temp, f.un);
    const double log_breg = (std::log(th_up) - std::log(th_dn)) - (th_up - th_dn) / th_dn;
    out.production[4].value += -area * c_v * down_value(cp_phi, f.un) * rho_up * log_breg * aun;

    const double s_up = up_value(f.entr, f.un), s_dn = down_value(f.entr, f.un);
    const double chi_breg = (chi.value(s_up) - chi.value(s_dn)) - chi.slope(s_dn) * (s_up - s_dn);
    out.production[5].value += -area * down_value(ph, f.un) * rho_up * chi_breg * aun;

    out.production[6].value +=
        -area * f.mu * avg(ph) * (jump(g_rho) * jump(f.rho) + jump(g_p) * jump(f.pres));
  }

  out.production_total = 0.0;
  out.min_production = std::numeric_limits<double>::infinity();
  for (const auto& p : out.production) {
    out.production_total += p.value;
    out.min_production = std::min(out.min_production, p.value);
    scale += std::abs(p.value);
  }
  out.defect = out.ddt - out.flux - out.production_total;
  out.scale = scale;
  return out;
}

double entropy_rate(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
                    const ChiSpec& chi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);
  const ChainRates rates = chain_rates(cons, prim, res, params.gamma);
  const double vol = grid.cell_volume();
  double rate = 0.0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double s = prim.entr[i];
    rate += vol * (res.d_rho[i] * chi.value(s) + cons.rho[i] * chi.slope(s) * rates.dentr[i]);
  }
  return rate;
}

FieldTotals field_totals(const ConservedField& cons, const Grid& grid, double gamma) {
  const PrimitiveField prim = primitive_from_conserved(cons, gamma);
  const double vol = grid.cell_volume();
  FieldTotals t;
  t.entropy_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    t.mass += vol * cons.rho[i];
    t.energy += vol * cons.ener[i];
    t.entropy_total += vol * cons.rho[i] * prim.entr[i];
    t.entropy_min = std::min(t.entropy_min, prim.entr[i]);
  }
  return t;
}

double renormalized_entropy_total(const ConservedField& cons, const Grid& grid, double gamma,
                                  const ChiSpec& chi) {
  const PrimitiveField prim = primitive_from_conserved(cons, gamma);
  const double vol = grid.cell_volume();
  double total = 0.0;
  for (std::size_t i = 0; i < cons.size(); ++i)
    total += vol * cons.rho[i] * chi.value(prim.entr[i]);
  return total;
}

BvRates weak_bv_rates(const ConservedField& cons, const Grid& grid, const SchemeParams& params) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const double area = grid.face_area();
  const double pen_weight = std::pow(grid.h(), params.alpha - 1.0);
  BvRates r;
  for (const Face& face : grid.interior_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const double lambda = std::abs(f.un) + f.mu;
    r.u2 += pen_weight * area * squared_norm(jump(f.vel));
    r.rho2 += lambda * area * jump(f.rho) * jump(f.rho);
    r.theta2 += lambda * area * jump(f.temp) * jump(f.temp);
  }
  return r;
}

BalanceReport make_balance_report(const ConservedField& cons, const Grid& grid,
                                  const SchemeParams& params) {
  BalanceReport rep;
  rep.totals = field_totals(cons, grid, params.gamma);
  rep.entropy_rate = entropy_rate(cons, grid, params, ChiSpec::identity());
  rep.bv = weak_bv_rates(cons, grid, params);
  return rep;
}

}  // namespace eulerfv
