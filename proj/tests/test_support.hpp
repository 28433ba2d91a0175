#pragma once

#include <random>
#include <vector>

#include "eulerfv/grid.hpp"
#include "eulerfv/params.hpp"
#include "eulerfv/thermo.hpp"

namespace test_support {

using namespace eulerfv;

inline Grid grid_1d(int cells, BoundaryKind bc, double lo = 0.0, double hi = 1.0) {
  const int c[] = {cells};
  const double l[] = {lo}, h[] = {hi};
  return Grid(1, c, l, h, bc);
}

inline Grid grid_2d(int nx, int ny, BoundaryKind bc) {
  const int c[] = {nx, ny};
  const double l[] = {0.0, 0.0};
  // Unit cell edge ratio: h identical on both axes.
  const double h[] = {1.0, static_cast<double>(ny) / nx};
  return Grid(2, c, l, h, bc);
}

inline Grid grid_3d(int n, BoundaryKind bc) {
  const int c[] = {n, n, n};
  const double l[] = {0.0, 0.0, 0.0};
  const double h[] = {1.0, 1.0, 1.0};
  return Grid(3, c, l, h, bc);
}

inline ConservedField random_state(const Grid& grid, double gamma, std::mt19937_64& rng,
                                   double umax = 0.5) {
  std::uniform_real_distribution<double> rho(0.5, 2.0);
  std::uniform_real_distribution<double> pres(0.5, 2.0);
  std::uniform_real_distribution<double> vel(-umax, umax);
  const auto n = static_cast<std::size_t>(grid.cell_count());
  ConservedField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rho(rng);
    Vec3 u;
    for (int a = 0; a < grid.dim(); ++a) u[a] = vel(rng);
    const double p = pres(rng);
    out.rho[i] = r;
    out.mom[i] = r * u;
    out.ener[i] = total_energy(r, u, p, gamma);
  }
  return out;
}

inline ConservedField uniform_state(const Grid& grid, double rho, const Vec3& u, double p,
                                    double gamma) {
  const auto n = static_cast<std::size_t>(grid.cell_count());
  ConservedField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.rho[i] = rho;
    out.mom[i] = rho * u;
    out.ener[i] = total_energy(rho, u, p, gamma);
  }
  return out;
}

inline std::vector<double> random_phi(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> phi(n);
  for (auto& v : phi) v = dist(rng);
  return phi;
}

inline std::vector<Vec3> random_phi_vec(std::size_t n, int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Vec3> phi(n);
  for (auto& v : phi)
    for (int a = 0; a < dim; ++a) v[a] = dist(rng);
  return phi;
}

}  // namespace test_support
