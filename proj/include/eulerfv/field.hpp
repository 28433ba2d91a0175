#pragma once

#include <cstddef>
#include <vector>

#include "eulerfv/vec.hpp"

namespace eulerfv {

/// Conservative state of a single cell (or ghost).
struct CellState {
  double rho = 0.0;
  Vec3 mom{};
  double ener = 0.0;

  friend bool operator==(const CellState&, const CellState&) = default;
};

/// Piecewise-constant conservative fields: the state vector evolved by the scheme.
struct ConservedField {
  std::vector<double> rho;
  std::vector<Vec3> mom;
  std::vector<double> ener;

  ConservedField() = default;
  explicit ConservedField(std::size_t n) : rho(n, 0.0), mom(n), ener(n, 0.0) {}

  std::size_t size() const { return rho.size(); }

  CellState cell(std::size_t i) const { return {rho[i], mom[i], ener[i]}; }

  void set_cell(std::size_t i, const CellState& s) {
    rho[i] = s.rho;
    mom[i] = s.mom;
    ener[i] = s.ener;
  }
};

/// Derived per-cell primitive quantities under the polytropic EOS.
struct PrimitiveField {
  std::vector<Vec3> vel;
  std::vector<double> pres;
  std::vector<double> temp;
  std::vector<double> entr;

  PrimitiveField() = default;
  explicit PrimitiveField(std::size_t n) : vel(n), pres(n, 0.0), temp(n, 0.0), entr(n, 0.0) {}

  std::size_t size() const { return pres.size(); }

  void resize(std::size_t n) {
    vel.resize(n);
    pres.resize(n, 0.0);
    temp.resize(n, 0.0);
    entr.resize(n, 0.0);
  }
};

/// out = a*x + b*y, cellwise.
inline void blend(ConservedField& out, double a, const ConservedField& x, double b,
                  const ConservedField& y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.rho[i] = a * x.rho[i] + b * y.rho[i];
    out.mom[i] = a * x.mom[i] + b * y.mom[i];
    out.ener[i] = a * x.ener[i] + b * y.ener[i];
  }
}

}  // namespace eulerfv
