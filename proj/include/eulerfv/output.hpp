#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "eulerfv/diagnostics.hpp"
#include "eulerfv/grid.hpp"

namespace eulerfv {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Streams diagnostics.csv: one row per sample time, fixed column schema
///   t, mass_total, energy_total, entropy_total, entropy_min, entropy_rate,
///   bv1, bv2, bv3, dt, retries
/// with bv* the time-integrated weak-BV functionals up to t and retries the
/// cumulative retry count. Plain decimal, 17 significant digits.
class DiagnosticsWriter {
 public:
  explicit DiagnosticsWriter(const std::filesystem::path& path);

  void row(double t, const BalanceReport& report, const WeakBvIntegrals& bv, double dt,
           std::int64_t retries);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream file_;
};

/// snap_<t>.csv: one row per cell with indices, centers, conserved and
/// primitive values.
void write_snapshot(const std::filesystem::path& path, const Grid& grid,
                    const ConservedField& cons, double gamma);

std::filesystem::path snapshot_path(const std::filesystem::path& dir, double t);

struct EocRow {
  double h = 0.0;
  double l1_rho = 0.0;
  double l1_mom = 0.0;
  double l1_ener = 0.0;
  double eoc_rho = 0.0;  // NaN on the first row (no coarser partner)
  double eoc_mom = 0.0;
  double eoc_ener = 0.0;
  WeakBvIntegrals bv{};
};

void write_eoc(const std::filesystem::path& path, const std::vector<EocRow>& rows);

std::string format_g17(double v);

}  // namespace eulerfv
