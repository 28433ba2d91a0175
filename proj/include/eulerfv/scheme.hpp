#pragma once

#include <span>
#include <vector>

#include "eulerfv/flux.hpp"
#include "eulerfv/grid.hpp"
#include "eulerfv/parallel.hpp"
#include "eulerfv/thermo.hpp"

namespace eulerfv {

/// Cellwise time derivatives d/dt (rho, m, E), per unit time.
///
/// Total mass and total energy rates vanish to roundoff: every face flux is
/// a single value entering the two adjacent cells with opposite signs.
struct Residual {
  std::vector<double> d_rho;
  std::vector<Vec3> d_mom;
  std::vector<double> d_ener;

  Residual() = default;
  explicit Residual(std::size_t n) : d_rho(n, 0.0), d_mom(n), d_ener(n, 0.0) {}
  void resize(std::size_t n) {
    d_rho.assign(n, 0.0);
    d_mom.assign(n, Vec3{});
    d_ener.assign(n, 0.0);
  }
  std::size_t size() const { return d_rho.size(); }
};

/// Reusable buffers for rhs(); one per time loop, so stepping does not
/// allocate per call.
struct RhsWorkspace {
  PrimitiveField prim;
  struct FaceFlux {
    double g_rho;
    Vec3 g_mom;
    double g_ener;
  };
  std::vector<FaceFlux> face_flux;
};

/// Semi-discrete right-hand side in cellwise form, obtained from the weak
/// statement with indicator test functions (incidence sign +1 for the
/// in-cell):
///   |K| drho_K = -sum_s s|sigma| F(rho)
///   |K| dm_K   = -sum_s s|sigma| (F(m) + p_bar n)       + sum_s s|sigma| h^(a-1)[[u]]
///   |K| dE_K   = -sum_s s|sigma| (F(E) + p_bar u_bar.n
///                                  - 1/4 [[p]][[u]].n)  + sum_s s|sigma| h^(a-1)[[u]].u_bar
/// Wall faces enter through mirror ghost traces; their mass and energy
/// fluxes vanish identically and the momentum flux reduces to the wall
/// pressure force plus velocity-jump damping of the normal component.
///
/// Deterministic for any worker count: face fluxes land in per-face slots,
/// then each cell gathers its own faces in a fixed order.
void rhs(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
         RhsWorkspace& ws, Residual& out, ThreadPool* pool = nullptr);

Residual rhs(const ConservedField& cons, const Grid& grid, const SchemeParams& params,
             ThreadPool* pool = nullptr);

/// Everything the face-sum evaluators need about one face: two-sided traces
/// of the state and derived quantities, the mu coefficient, and geometry.
/// Wall faces carry the mirror ghost on the out side.
struct FaceView {
  int axis = 0;
  double sign = 1.0;
  std::int32_t in = 0;
  std::int32_t out = 0;  // Face::ghost_cell for wall faces
  bool wall = false;
  FaceTrace<double> rho, pres, temp, ener, entr;
  FaceTrace<Vec3> vel, mom;
  double un = 0.0;  // u_bar . n
  double mu = 0.0;
};

FaceView make_face_view(const Grid& grid, const ConservedField& cons, const PrimitiveField& prim,
                        const SchemeParams& params, const Face& face);

/// Trace of a piecewise-constant test function on a face. Test functions
/// live on the domain and are zero on ghost cells, which is what makes the
/// cellwise and weak statements agree exactly at wall faces.
inline FaceTrace<double> phi_trace(const FaceView& f, std::span<const double> phi) {
  return {phi[static_cast<std::size_t>(f.in)],
          f.wall ? 0.0 : phi[static_cast<std::size_t>(f.out)]};
}

inline FaceTrace<Vec3> phi_trace(const FaceView& f, std::span<const Vec3> phi) {
  return {phi[static_cast<std::size_t>(f.in)],
          f.wall ? Vec3{} : phi[static_cast<std::size_t>(f.out)]};
}

enum class Equation { continuity, momentum, energy };

/// A signed defect together with the magnitude scale of the terms that
/// produced it, for relative-tolerance checks.
struct DefectResult {
  double defect = 0.0;
  double scale = 0.0;
};

/// Weak-form defect of the chosen equation for a piecewise-constant test
/// function, with the time-derivative terms supplied by rhs(). Implemented
/// directly as face sums over jumps of the test function (the energy
/// pressure work in its original two-sum form), independent of the cellwise
/// assembly, so a vanishing defect pins the sign conventions of both.
DefectResult weak_form_defect(const ConservedField& cons, const Grid& grid,
                              const SchemeParams& params, Equation eq,
                              std::span<const double> phi);

/// Momentum variant with a vector-valued test function.
DefectResult weak_form_defect(const ConservedField& cons, const Grid& grid,
                              const SchemeParams& params, std::span<const Vec3> phi);

}  // namespace eulerfv
