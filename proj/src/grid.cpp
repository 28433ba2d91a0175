#include "eulerfv/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerfv/thermo.hpp"

namespace eulerfv {

Grid::Grid(int dim, std::span<const int> cells_per_axis, std::span<const double> lo,
           std::span<const double> hi, BoundaryKind bc)
    : dim_(dim), bc_(bc) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid: dim must be 1, 2 or 3");
  if (cells_per_axis.size() != static_cast<std::size_t>(dim) ||
      lo.size() != static_cast<std::size_t>(dim) || hi.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("grid: per-axis argument count must equal dim");

  for (int a = 0; a < dim; ++a) {
    const auto ia = static_cast<std::size_t>(a);
    if (cells_per_axis[ia] < 2)
      throw std::invalid_argument("grid: need at least 2 cells per axis");
    if (!(hi[ia] > lo[ia])) throw std::invalid_argument("grid: degenerate extents");
    cells_[ia] = cells_per_axis[ia];
    lo_[ia] = lo[ia];
    hi_[ia] = hi[ia];
  }

  h_ = (hi_[0] - lo_[0]) / cells_[0];
  for (int a = 1; a < dim; ++a) {
    const double ha = (hi_[a] - lo_[a]) / cells_[a];
    if (std::abs(ha - h_) > 1e-12 * h_)
      throw std::invalid_argument("grid: cell edge length must be identical on every axis");
  }
  cell_volume_ = std::pow(h_, dim);
  face_area_ = std::pow(h_, dim - 1);

  cell_count_ = 1;
  for (int a = 0; a < dim; ++a) cell_count_ *= cells_[static_cast<std::size_t>(a)];

  const auto linear = [this](int i, int j, int k) {
    return static_cast<std::int32_t>(i + cells_[0] * (j + cells_[1] * static_cast<std::int64_t>(k)));
  };

  // Interior faces: the face between a cell and its +axis neighbor (with wrap
  // for periodic boundaries). Axis-major, lexicographic cell order.
  const int nx = cells_[0], ny = cells_[1], nz = cells_[2];
  for (std::int8_t a = 0; a < dim; ++a) {
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
          int coord[3] = {i, j, k};
          const int na = cells_[static_cast<std::size_t>(a)];
          if (coord[a] == na - 1 && bc_ == BoundaryKind::wall) continue;
          int ncoord[3] = {i, j, k};
          ncoord[a] = (coord[a] + 1) % na;
          faces_.push_back(Face{linear(i, j, k), linear(ncoord[0], ncoord[1], ncoord[2]), a, 1});
        }
  }
  interior_face_count_ = static_cast<std::int64_t>(faces_.size());

  // Wall boundary faces: low side (outward normal -e_a) then high side (+e_a).
  if (bc_ == BoundaryKind::wall) {
    for (std::int8_t a = 0; a < dim; ++a) {
      for (int side = 0; side < 2; ++side) {
        const int edge = side == 0 ? 0 : cells_[static_cast<std::size_t>(a)] - 1;
        const std::int8_t sign = side == 0 ? -1 : 1;
        for (int k = 0; k < nz; ++k)
          for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
              int coord[3] = {i, j, k};
              if (coord[a] != edge) continue;
              faces_.push_back(Face{linear(i, j, k), Face::ghost_cell, a, sign});
            }
      }
    }
  }

  // Per-cell incidence in fixed (axis: low face, high face) order.
  faces_per_cell_ = static_cast<std::size_t>(2 * dim);
  cell_faces_.assign(static_cast<std::size_t>(cell_count_) * faces_per_cell_, CellFace{-1, 0});
  for (std::int32_t f = 0; f < static_cast<std::int32_t>(faces_.size()); ++f) {
    const Face& face = faces_[static_cast<std::size_t>(f)];
    const auto slot = [this](std::int32_t cell, int axis, int side) -> CellFace& {
      return cell_faces_[static_cast<std::size_t>(cell) * faces_per_cell_ +
                         static_cast<std::size_t>(2 * axis + side)];
    };
    if (!face.is_boundary()) {
      slot(face.in_cell, face.axis, 1) = CellFace{f, 1};    // in-cell's high side
      slot(face.out_cell, face.axis, 0) = CellFace{f, -1};  // out-cell's low side
    } else {
      slot(face.in_cell, face.axis, face.normal_sign > 0 ? 1 : 0) = CellFace{f, 1};
    }
  }
}

std::array<int, 3> Grid::cell_coords(std::int32_t cell) const {
  std::array<int, 3> c{0, 0, 0};
  std::int64_t rest = cell;
  c[0] = static_cast<int>(rest % cells_[0]);
  rest /= cells_[0];
  c[1] = static_cast<int>(rest % cells_[1]);
  rest /= cells_[1];
  c[2] = static_cast<int>(rest);
  return c;
}

std::int32_t Grid::cell_index(const std::array<int, 3>& coords) const {
  return static_cast<std::int32_t>(
      coords[0] + cells_[0] * (coords[1] + cells_[1] * static_cast<std::int64_t>(coords[2])));
}

Vec3 Grid::cell_center(std::int32_t cell) const {
  const auto c = cell_coords(cell);
  Vec3 x;
  for (int a = 0; a < dim_; ++a)
    x[a] = lo_[static_cast<std::size_t>(a)] + (c[static_cast<std::size_t>(a)] + 0.5) * h_;
  return x;
}

CellState ghost_state(const CellState& interior, const Vec3& outward_normal, double gamma) {
  const double rho_g = interior.rho;
  const Vec3 u = (1.0 / interior.rho) * interior.mom;
  const Vec3 u_g = u - 2.0 * dot(u, outward_normal) * outward_normal;
  const double p_g = pressure(interior, gamma);
  return CellState{rho_g, rho_g * u_g, total_energy(rho_g, u_g, p_g, gamma)};
}

}  // namespace eulerfv
