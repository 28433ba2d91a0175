#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerfv/scheme.hpp"
#include "test_support.hpp"

using namespace eulerfv;
using test_support::grid_1d;
using test_support::grid_2d;
using test_support::random_state;
using test_support::uniform_state;

namespace {

SchemeParams default_params(BoundaryKind bc) {
  SchemeParams p;
  p.bc = bc;
  return p;
}

}  // namespace

TEST_CASE("spatially constant state has zero residual under both boundary kinds") {
  for (const BoundaryKind bc : {BoundaryKind::periodic, BoundaryKind::wall}) {
    for (const Vec3& u : {Vec3{0.0, 0.0, 0.0}, Vec3{0.4, -0.2, 0.0}}) {
      const Grid g = grid_2d(4, 4, bc);
      SchemeParams params = default_params(bc);
      // A wall box with through-flow is not a steady state; use u = 0 there.
      if (bc == BoundaryKind::wall && norm(u) > 0.0) continue;
      const ConservedField f = uniform_state(g, 1.3, u, 0.9, params.gamma);
      const Residual r = rhs(f, g, params);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(r.d_rho[i]) < 1e-14);
        CHECK(norm(r.d_mom[i]) < 1e-14);
        CHECK(std::abs(r.d_ener[i]) < 1e-14);
      }
    }
  }
}

TEST_CASE("two-cell periodic hand example: pure mu diffusion") {
  // rho = (1, 2), u = 0, uniform p: the only active term is -mu [[.]] on
  // both faces. h = 0.5, mu = 0.1, alpha = 1.
  const Grid g = grid_1d(2, BoundaryKind::periodic);
  SchemeParams params = default_params(BoundaryKind::periodic);
  params.mu = MuSpec{MuMode::power, 0.1, 0.0};  // mu = 0.1 exactly
  params.alpha = 1.0;

  const double p = 1.0;
  ConservedField f(2);
  f.rho = {1.0, 2.0};
  f.mom = {Vec3{}, Vec3{}};
  f.ener = {p / 0.4, p / 0.4};  // uniform pressure means uniform E at u = 0

  const Residual r = rhs(f, g, params);
  CHECK(r.d_rho[0] == doctest::Approx(0.4));
  CHECK(r.d_rho[1] == doctest::Approx(-0.4));
  CHECK(norm(r.d_mom[0]) < 1e-14);
  CHECK(norm(r.d_mom[1]) < 1e-14);
  // [[E]] = 0, so the energy diffusion vanishes here.
  CHECK(std::abs(r.d_ener[0]) < 1e-14);
  CHECK(std::abs(r.d_ener[1]) < 1e-14);

  // Same setup with nonuniform E: d_ener = -/+ mu [[E]] |sigma|/|K|, equal
  // and opposite on the two cells (two faces see the same jump).
  f.ener = {2.5, 3.5};
  const Residual r2 = rhs(f, g, params);
  CHECK(r2.d_ener[0] == doctest::Approx(2.0 * 0.1 * 1.0 / 0.5));
  CHECK(r2.d_ener[1] == doctest::Approx(-r2.d_ener[0]));
}

TEST_CASE("total mass and energy rates vanish for randomized states") {
  std::mt19937_64 rng(41);
  for (const BoundaryKind bc : {BoundaryKind::periodic, BoundaryKind::wall}) {
    const Grid g = grid_2d(6, 6, bc);
    const SchemeParams params = default_params(bc);
    for (int k = 0; k < 20; ++k) {
      const ConservedField f = random_state(g, params.gamma, rng);
      const Residual r = rhs(f, g, params);
      double dm = 0.0, de = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        dm += g.cell_volume() * r.d_rho[i];
        de += g.cell_volume() * r.d_ener[i];
        scale += g.cell_volume() * (std::abs(r.d_rho[i]) + std::abs(r.d_ener[i]));
      }
      CHECK(std::abs(dm) <= 1e-13 * std::max(1.0, scale));
      CHECK(std::abs(de) <= 1e-13 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("uniform state in a wall box: pressure forces balance exactly") {
  const Grid g = grid_2d(5, 5, BoundaryKind::wall);
  const SchemeParams params = default_params(BoundaryKind::wall);
  const ConservedField f = uniform_state(g, 1.0, Vec3{}, 1.0, params.gamma);
  const Residual r = rhs(f, g, params);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(norm(r.d_mom[i]) < 1e-14);
    CHECK(std::abs(r.d_rho[i]) < 1e-14);
    CHECK(std::abs(r.d_ener[i]) < 1e-14);
  }
}

TEST_CASE("weak-form defect vanishes for random test functions") {
  std::mt19937_64 rng(43);
  for (const BoundaryKind bc : {BoundaryKind::periodic, BoundaryKind::wall}) {
    for (int dim_case = 0; dim_case < 2; ++dim_case) {
      const Grid g = dim_case == 0 ? grid_1d(16, bc) : grid_2d(8, 8, bc);
      const SchemeParams params = default_params(bc);
      const ConservedField f = random_state(g, params.gamma, rng);
      const auto n = f.size();
      for (int k = 0; k < 25; ++k) {
        const auto phi = test_support::random_phi(n, rng);
        const auto phiv = test_support::random_phi_vec(n, g.dim(), rng);
        const auto dc = weak_form_defect(f, g, params, Equation::continuity, phi);
        const auto dm = weak_form_defect(f, g, params, phiv);
        const auto de = weak_form_defect(f, g, params, Equation::energy, phi);
        CHECK(std::abs(dc.defect) <= 1e-12 * std::max(1.0, dc.scale));
        CHECK(std::abs(dm.defect) <= 1e-12 * std::max(1.0, dm.scale));
        CHECK(std::abs(de.defect) <= 1e-12 * std::max(1.0, de.scale));
      }
    }
  }
}

TEST_CASE("phi == 1 reproduces exact conservation in the weak form") {
  std::mt19937_64 rng(47);
  const Grid g = grid_1d(12, BoundaryKind::wall);
  const SchemeParams params = default_params(BoundaryKind::wall);
  const ConservedField f = random_state(g, params.gamma, rng);
  const std::vector<double> ones(f.size(), 1.0);
  // With constant phi the face sums telescope; the defect reduces to the
  // total mass/energy rate.
  const auto dc = weak_form_defect(f, g, params, Equation::continuity, ones);
  const auto de = weak_form_defect(f, g, params, Equation::energy, ones);
  CHECK(std::abs(dc.defect) <= 1e-13 * std::max(1.0, dc.scale));
  CHECK(std::abs(de.defect) <= 1e-13 * std::max(1.0, de.scale));
}

TEST_CASE("1D contact: with mu = 0 and penalty off, continuity is pure upwind transport") {
  const Grid g = grid_1d(16, BoundaryKind::periodic);
  SchemeParams params = default_params(BoundaryKind::periodic);
  params.mu.mode = MuMode::none;
  params.penalty = false;

  // rho varies, u and p constant.
  const double u = 0.7, p = 1.0;
  const auto n = static_cast<std::size_t>(g.cell_count());
  ConservedField f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = 1.0 + 0.5 * std::sin(2.0 * 3.14159265358979323846 * (i + 0.5) / n);
    f.rho[i] = rho;
    f.mom[i] = Vec3{rho * u, 0.0, 0.0};
    f.ener[i] = total_energy(rho, Vec3{u, 0.0, 0.0}, p, params.gamma);
  }

  const Residual r = rhs(f, g, params);
  const double h = g.h();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const double expected = -u * (f.rho[i] - f.rho[prev]) / h;  // u > 0: donor is the left cell
    CHECK(r.d_rho[i] == doctest::Approx(expected).epsilon(1e-12));
    // Momentum and energy rates follow the density rate (contact structure).
    CHECK(r.d_mom[i][0] == doctest::Approx(u * expected).epsilon(1e-12));
    CHECK(r.d_ener[i] == doctest::Approx(0.5 * u * u * expected).epsilon(1e-12));
  }
}

TEST_CASE("reflection symmetry: mirroring the state mirrors the residual") {
  std::mt19937_64 rng(53);
  for (const BoundaryKind bc : {BoundaryKind::periodic, BoundaryKind::wall}) {
    const Grid g = grid_1d(10, bc);
    const SchemeParams params = default_params(bc);
    const ConservedField f = random_state(g, params.gamma, rng);

    const auto n = f.size();
    ConservedField mirrored(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - 1 - i;
      mirrored.rho[i] = f.rho[j];
      mirrored.mom[i] = Vec3{-f.mom[j][0], 0.0, 0.0};
      mirrored.ener[i] = f.ener[j];
    }

    const Residual r = rhs(f, g, params);
    const Residual rm = rhs(mirrored, g, params);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = n - 1 - i;
      CHECK(rm.d_rho[i] == doctest::Approx(r.d_rho[j]).epsilon(1e-12));
      CHECK(rm.d_mom[i][0] == doctest::Approx(-r.d_mom[j][0]).epsilon(1e-12));
      CHECK(rm.d_ener[i] == doctest::Approx(r.d_ener[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("rhs is bit-identical across worker counts") {
  std::mt19937_64 rng(59);
  const Grid g = grid_2d(8, 8, BoundaryKind::periodic);
  const SchemeParams params = default_params(BoundaryKind::periodic);
  const ConservedField f = random_state(g, params.gamma, rng);

  const Residual serial = rhs(f, g, params);
  ThreadPool pool(4);
  const Residual parallel = rhs(f, g, params, &pool);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(serial.d_rho[i] == parallel.d_rho[i]);
    CHECK(serial.d_mom[i] == parallel.d_mom[i]);
    CHECK(serial.d_ener[i] == parallel.d_ener[i]);
  }
}

TEST_CASE("rhs propagates inadmissible states") {
  const Grid g = grid_1d(4, BoundaryKind::periodic);
  const SchemeParams params = default_params(BoundaryKind::periodic);
  ConservedField f = uniform_state(g, 1.0, Vec3{}, 1.0, params.gamma);
  f.rho[2] = -1.0;
  CHECK_THROWS_AS(rhs(f, g, params), AdmissibilityError);
}

TEST_CASE("2D rotational symmetry: swapping the axes swaps the residual") {
  std::mt19937_64 rng(61);
  const Grid g = grid_2d(6, 6, BoundaryKind::periodic);
  const SchemeParams params = default_params(BoundaryKind::periodic);
  const ConservedField f = random_state(g, params.gamma, rng);

  // Transpose the field: cell (i,j) -> (j,i), velocity components swapped.
  const auto n = f.size();
  ConservedField swapped(n);
  for (std::int32_t c = 0; c < g.cell_count(); ++c) {
    const auto coords = g.cell_coords(c);
    const auto tc = g.cell_index({coords[1], coords[0], 0});
    const auto i = static_cast<std::size_t>(c), j = static_cast<std::size_t>(tc);
    swapped.rho[j] = f.rho[i];
    swapped.mom[j] = Vec3{f.mom[i][1], f.mom[i][0], 0.0};
    swapped.ener[j] = f.ener[i];
  }

  const Residual r = rhs(f, g, params);
  const Residual rs = rhs(swapped, g, params);
  for (std::int32_t c = 0; c < g.cell_count(); ++c) {
    const auto coords = g.cell_coords(c);
    const auto tc = g.cell_index({coords[1], coords[0], 0});
    const auto i = static_cast<std::size_t>(c), j = static_cast<std::size_t>(tc);
    CHECK(rs.d_rho[j] == doctest::Approx(r.d_rho[i]).epsilon(1e-12));
    CHECK(rs.d_mom[j][0] == doctest::Approx(r.d_mom[i][1]).epsilon(1e-12));
    CHECK(rs.d_mom[j][1] == doctest::Approx(r.d_mom[i][0]).epsilon(1e-12));
    CHECK(rs.d_ener[j] == doctest::Approx(r.d_ener[i]).epsilon(1e-12));
  }
}

TEST_CASE("3D: face counts, constant-state residual, conservation, identities") {
  std::mt19937_64 rng(131);
  for (const BoundaryKind bc : {BoundaryKind::periodic, BoundaryKind::wall}) {
    const Grid g = test_support::grid_3d(3, bc);
    CHECK(g.cell_count() == 27);
    if (bc == BoundaryKind::periodic) {
      CHECK(g.interior_face_count() == 81);  // one face per cell per axis
      CHECK(g.boundary_faces().empty());
    } else {
      CHECK(g.interior_face_count() == 54);  // 2 * 3x3 per axis
      CHECK(g.boundary_faces().size() == 54);
    }

    SchemeParams params = default_params(bc);
    const ConservedField uni = uniform_state(g, 1.1, Vec3{}, 0.7, params.gamma);
    const Residual r0 = rhs(uni, g, params);
    for (std::size_t i = 0; i < uni.size(); ++i) {
      CHECK(std::abs(r0.d_rho[i]) < 1e-14);
      CHECK(norm(r0.d_mom[i]) < 1e-14);
      CHECK(std::abs(r0.d_ener[i]) < 1e-14);
    }

    const ConservedField f = random_state(g, params.gamma, rng);
    const Residual r = rhs(f, g, params);
    double dm = 0.0, de = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      dm += r.d_rho[i];
      de += r.d_ener[i];
    }
    CHECK(std::abs(g.cell_volume() * dm) < 1e-13);
    CHECK(std::abs(g.cell_volume() * de) < 1e-13);

    const auto phi = test_support::random_phi(f.size(), rng);
    const auto d = weak_form_defect(f, g, params, Equation::energy, phi);
    CHECK(std::abs(d.defect) <= 1e-12 * std::max(1.0, d.scale));
  }
}
