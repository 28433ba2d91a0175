#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "eulerfv/field.hpp"
#include "eulerfv/params.hpp"
#include "eulerfv/vec.hpp"

namespace eulerfv {

/// One face of the mesh. The unit normal is normal_sign * e_axis and points
/// from the "in" cell to the "out" cell; out_cell == ghost_cell marks a wall
/// boundary face whose out state is synthesized by ghost_state().
struct Face {
  static constexpr std::int32_t ghost_cell = -1;

  std::int32_t in_cell = 0;
  std::int32_t out_cell = ghost_cell;
  std::int8_t axis = 0;
  std::int8_t normal_sign = 1;

  bool is_boundary() const { return out_cell == ghost_cell; }
};

/// Uniform structured rectangular/cubic mesh (1D/2D/3D), axis-aligned,
/// equal edge length h on every axis. Immutable after construction and
/// safe to share across threads.
///
/// Cell linear index is x-fastest; faces are enumerated axis-major, then
/// in lexicographic cell order, interior faces first, then (for wall
/// boundaries) boundary faces. Both orders are deterministic so that face
/// and cell sweeps reproduce bit-identically.
class Grid {
 public:
  Grid(int dim, std::span<const int> cells_per_axis, std::span<const double> lo,
       std::span<const double> hi, BoundaryKind bc);

  int dim() const { return dim_; }
  BoundaryKind bc() const { return bc_; }
  double h() const { return h_; }
  double cell_volume() const { return cell_volume_; }   // |K| = h^dim
  double face_area() const { return face_area_; }       // |sigma| = h^(dim-1)
  int cells_along(int axis) const { return cells_[static_cast<std::size_t>(axis)]; }
  double lo(int axis) const { return lo_[static_cast<std::size_t>(axis)]; }
  double hi(int axis) const { return hi_[static_cast<std::size_t>(axis)]; }
  double extent(int axis) const { return hi(axis) - lo(axis); }

  std::int64_t cell_count() const { return cell_count_; }
  std::int64_t face_count() const { return static_cast<std::int64_t>(faces_.size()); }
  std::int64_t interior_face_count() const { return interior_face_count_; }

  std::span<const Face> all_faces() const { return faces_; }
  std::span<const Face> interior_faces() const {
    return {faces_.data(), static_cast<std::size_t>(interior_face_count_)};
  }
  std::span<const Face> boundary_faces() const {
    return {faces_.data() + interior_face_count_,
            faces_.size() - static_cast<std::size_t>(interior_face_count_)};
  }

  /// Incidence of one face on one cell; sign is s_{K,sigma}: +1 when the cell
  /// is the face's in-cell, -1 when it is the out-cell.
  struct CellFace {
    std::int32_t face;
    std::int8_t sign;
  };

  /// Faces of a cell in fixed (axis, low-side then high-side) order.
  std::span<const CellFace> faces_of(std::int32_t cell) const {
    const auto off = static_cast<std::size_t>(cell) * faces_per_cell_;
    return {cell_faces_.data() + off, faces_per_cell_};
  }

  std::array<int, 3> cell_coords(std::int32_t cell) const;
  std::int32_t cell_index(const std::array<int, 3>& coords) const;
  Vec3 cell_center(std::int32_t cell) const;
  Vec3 face_normal(const Face& f) const { return axis_vector(f.axis, f.normal_sign); }

 private:
  int dim_;
  std::array<int, 3> cells_{1, 1, 1};
  std::array<double, 3> lo_{0, 0, 0};
  std::array<double, 3> hi_{1, 1, 1};
  BoundaryKind bc_;
  double h_ = 0.0;
  double cell_volume_ = 0.0;
  double face_area_ = 0.0;
  std::int64_t cell_count_ = 0;
  std::int64_t interior_face_count_ = 0;
  std::vector<Face> faces_;
  std::size_t faces_per_cell_ = 0;
  std::vector<CellFace> cell_faces_;
};

/// Mirror ghost state for a wall face: density and pressure are extrapolated
/// (zero normal gradient) and the normal velocity component is reflected, so
/// the face sees u_bar.n = 0 and [[rho]] = [[p]] = 0 exactly.
CellState ghost_state(const CellState& interior, const Vec3& outward_normal, double gamma);

}  // namespace eulerfv
