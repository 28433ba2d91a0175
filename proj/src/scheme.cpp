#include "eulerfv/scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerfv {

namespace {

struct FaceSides {
  CellState in, out;
  Vec3 u_in, u_out;
  double p_in, p_out, th_in, th_out;
};

// Gather both sides of a face, synthesizing the mirror ghost at walls.
inline FaceSides gather_sides(const ConservedField& cons, const PrimitiveField& prim,
                              const Face& face) {
  FaceSides s;
  const auto i = static_cast<std::size_t>(face.in_cell);
  s.in = cons.cell(i);
  s.u_in = prim.vel[i];
  s.p_in = prim.pres[i];
  s.th_in = prim.temp[i];
  if (!face.is_boundary()) {
    const auto o = static_cast<std::size_t>(face.out_cell);
    s.out = cons.cell(o);
    s.u_out = prim.vel[o];
    s.p_out = prim.pres[o];
    s.th_out = prim.temp[o];
  } else {
    // Mirror ghost: reflected normal velocity, extrapolated rho and p.
    s.out = s.in;
    s.out.mom[face.axis] = -s.in.mom[face.axis];
    s.u_out = s.u_in;
    s.u_out[face.axis] = -s.u_in[face.axis];
    s.p_out = s.p_in;
    s.th_out = s.th_in;
  }
  return s;
}

}  // namespace

void rhs(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
         RhsWorkspace& ws, Residual& out, ThreadPool* pool) {
  if (grid.bc() != params.bc)
    throw std::invalid_argument("rhs: params.bc does not match the grid boundary kind");
  const auto n = cons.size();
  if (n != static_cast<std::size_t>(grid.cell_count()))
    throw std::invalid_argument("rhs: field size does not match the grid");

  primitive_from_conserved(cons, params.gamma, params.floors, ws.prim, /*with_entropy=*/false);
  out.resize(n);
  ws.face_flux.resize(static_cast<std::size_t>(grid.face_count()));

  const double h = grid.h();
  const double gamma = params.gamma;
  const double pen = params.penalty_coefficient(h);
  const bool mu_per_face = params.mu.mode == MuMode::lax_friedrichs;
  const double mu_const =
      mu_per_face ? 0.0 : mu_coefficient({1.0, 1.0}, 0.0, h, params.mu, gamma);
  const auto faces = grid.all_faces();
  const PrimitiveField& prim = ws.prim;

  // Phase 1: one flux record per face. G carries every face term with the
  // in-cell orientation; cells pick it up with their incidence sign.
  const auto face_kernel = [&](std::int64_t fb, std::int64_t fe) {
    for (std::int64_t f = fb; f < fe; ++f) {
      const Face& face = faces[static_cast<std::size_t>(f)];
      const FaceSides s = gather_sides(cons, prim, face);
      const double sign = face.normal_sign;
      const int ax = face.axis;

      const double un = 0.5 * sign * (s.u_in[ax] + s.u_out[ax]);
      const FaceTrace<double> theta{s.th_in, s.th_out};
      const double mu =
          mu_per_face ? mu_coefficient(theta, un, h, params.mu, gamma) : mu_const;

      const FaceTrace<double> rho{s.in.rho, s.out.rho};
      const FaceTrace<Vec3> mom{s.in.mom, s.out.mom};
      const FaceTrace<double> ener{s.in.ener, s.out.ener};
      const FaceTrace<double> pres{s.p_in, s.p_out};
      const FaceTrace<Vec3> u{s.u_in, s.u_out};
      const FaceTrace<double> u_n{sign * s.u_in[ax], sign * s.u_out[ax]};

      auto& rec = ws.face_flux[static_cast<std::size_t>(f)];
      rec.g_rho = scalar_flux(rho, un, mu);

      const Vec3 ju = jump(u);
      rec.g_mom = vector_flux(mom, un, mu);
      rec.g_mom[ax] += sign * avg(pres);  // p_bar n
      rec.g_mom -= pen * ju;              // velocity penalty, incidence-signed

      rec.g_ener = scalar_flux(ener, un, mu) + energy_pressure_flux(pres, u_n) -
                   pen * dot(ju, avg(u));
    }
  };
  chunked_for(grid.face_count(), pool, face_kernel);

  // Phase 2: each cell gathers its own faces in a fixed order, so the
  // result is bit-identical for every worker count.
  const double area_over_vol = grid.face_area() / grid.cell_volume();
  const auto cell_kernel = [&](std::int64_t cb, std::int64_t ce) {
    for (std::int64_t k = cb; k < ce; ++k) {
      double a_rho = 0.0, a_ener = 0.0;
      Vec3 a_mom;
      for (const Grid::CellFace& cf : grid.faces_of(static_cast<std::int32_t>(k))) {
        const auto& rec = ws.face_flux[static_cast<std::size_t>(cf.face)];
        const double sgn = cf.sign;
        a_rho += sgn * rec.g_rho;
        a_mom += sgn * rec.g_mom;
        a_ener += sgn * rec.g_ener;
      }
      const auto i = static_cast<std::size_t>(k);
      out.d_rho[i] = -area_over_vol * a_rho;
      out.d_mom[i] = -area_over_vol * a_mom;
      out.d_ener[i] = -area_over_vol * a_ener;
    }
  };
  chunked_for(grid.cell_count(), pool, cell_kernel);
}

Residual rhs(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
             ThreadPool* pool) {
  RhsWorkspace ws;
  Residual out;
  rhs(cons, grid, params, ws, out, pool);
  return out;
}

FaceView make_face_view(const Grid& grid, const ConservedField& cons, const PrimitiveField& prim,
                        const SchemeParams& params, const Face& face) {
  const FaceSides s = gather_sides(cons, prim, face);
  FaceView v;
  v.axis = face.axis;
  v.sign = face.normal_sign;
  v.in = face.in_cell;
  v.out = face.out_cell;
  v.wall = face.is_boundary();
  v.rho = {s.in.rho, s.out.rho};
  v.mom = {s.in.mom, s.out.mom};
  v.ener = {s.in.ener, s.out.ener};
  v.vel = {s.u_in, s.u_out};
  v.pres = {s.p_in, s.p_out};
  v.temp = {s.th_in, s.th_out};
  v.entr = {entropy(s.in.rho, s.th_in, params.gamma), entropy(s.out.rho, s.th_out, params.gamma)};
  v.un = 0.5 * v.sign * (s.u_in[face.axis] + s.u_out[face.axis]);
  v.mu = mu_coefficient(v.temp, v.un, grid.h(), params.mu, params.gamma);
  return v;
}

namespace {

// Normal-component trace of a vector trace: (x.n) per side.
inline FaceTrace<double> normal_trace(const FaceView& f, const FaceTrace<Vec3>& x) {
  return {f.sign * x.in[f.axis], f.sign * x.out[f.axis]};
}

}  // namespace

DefectResult weak_form_defect(const ConservedField& cons, const Grid& grid,
                              const SchemeParams& params, Equation eq,
                              std::span<const double> phi) {
  if (eq == Equation::momentum)
    throw std::invalid_argument("weak_form_defect: momentum needs a vector test function");
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);

  const double vol = grid.cell_volume();
  const double area = grid.face_area();
  const double pen = params.penalty_coefficient(grid.h());

  double defect = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double term = vol * phi[i] * (eq == Equation::continuity ? res.d_rho[i] : res.d_ener[i]);
    defect += term;
    scale += std::abs(term);
  }

  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<double> ph = phi_trace(f, phi);
    double term = 0.0;
    if (eq == Equation::continuity) {
      term = -area * scalar_flux(f.rho, f.un, f.mu) * jump(ph);
    } else {
      const FaceTrace<double> u_n = normal_trace(f, f.vel);
      // [[phi u]].n and (p phi)_bar [[u]].n: the two-sum statement of the
      // energy pressure work.
      const FaceTrace<double> phi_un{ph.in * u_n.in, ph.out * u_n.out};
      const FaceTrace<double> p_phi{f.pres.in * ph.in, f.pres.out * ph.out};
      term = -area * scalar_flux(f.ener, f.un, f.mu) * jump(ph) -
             area * avg(f.pres) * jump(phi_un) + area * avg(p_phi) * jump(normal_trace(f, f.vel)) +
             area * pen * dot(jump(f.vel), avg(f.vel)) * jump(ph);
    }
    defect += term;
    scale += std::abs(term);
  }
  return {defect, scale};
}

DefectResult weak_form_defect(const ConservedField& cons, const Grid& grid,
                              const SchemeParams& params, std::span<const Vec3> phi) {
  const PrimitiveField prim = primitive_from_conserved(cons, params.gamma, params.floors);
  const Residual res = rhs(cons, grid, params);

  const double vol = grid.cell_volume();
  const double area = grid.face_area();
  const double pen = params.penalty_coefficient(grid.h());

  double defect = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double term = vol * dot(res.d_mom[i], phi[i]);
    defect += term;
    scale += std::abs(term);
  }

  for (const Face& face : grid.all_faces()) {
    const FaceView f = make_face_view(grid, cons, prim, params, face);
    const FaceTrace<Vec3> ph = phi_trace(f, phi);
    const Vec3 jph = jump(ph);
    const Vec3 n = axis_vector(f.axis, f.sign);
    const double term = -area * dot(vector_flux(f.mom, f.un, f.mu), jph) -
                        area * avg(f.pres) * dot(n, jph) +
                        area * pen * dot(jump(f.vel), jph);
    defect += term;
    scale += std::abs(term);
  }
  return {defect, scale};
}

}  // namespace eulerfv
