#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "eulerfv/config.hpp"
#include "eulerfv/output.hpp"

namespace eulerfv {

struct ConvergenceResult {
  std::vector<EocRow> rows;
  std::filesystem::path eoc_path;
};

/// Mesh-convergence study: run the configured problem on `levels` successive
/// mesh halvings, measure per-field L1 errors at t_end against the analytic
/// solution (cell-midpoint evaluation, consistent with initialization), and
/// report the experimental order of convergence between consecutive
/// resolutions together with the weak-BV functionals per resolution.
///
/// Smooth reference solutions are self-tested at setup via a pointwise
/// finite-difference Euler residual check.
ConvergenceResult convergence_study(const RunConfig& base, int levels, int threads = 1,
                                    std::ostream* log = nullptr);

}  // namespace eulerfv
