#include "eulerfv/output.hpp"

#include <cstdio>

#include "eulerfv/thermo.hpp"

namespace eulerfv {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

DiagnosticsWriter::DiagnosticsWriter(const std::filesystem::path& path) : path_(path) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  file_.open(path);
  if (!file_) throw OutputError("cannot open " + path.string());
  file_ << "t,mass_total,energy_total,entropy_total,entropy_min,entropy_rate,"
           "bv1,bv2,bv3,dt,retries\n";
}

void DiagnosticsWriter::row(double t, const BalanceReport& report, const WeakBvIntegrals& bv,
                            double dt, std::int64_t retries) {
  file_ << format_g17(t) << ',' << format_g17(report.totals.mass) << ','
        << format_g17(report.totals.energy) << ',' << format_g17(report.totals.entropy_total)
        << ',' << format_g17(report.totals.entropy_min) << ',' << format_g17(report.entropy_rate)
        << ',' << format_g17(bv.b1) << ',' << format_g17(bv.b2) << ',' << format_g17(bv.b3) << ','
        << format_g17(dt) << ',' << retries << '\n';
  if (!file_) throw OutputError("write failed: " + path_.string());
}

std::filesystem::path snapshot_path(const std::filesystem::path& dir, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snap_%.6g.csv", t);
  return dir / buf;
}

void write_snapshot(const std::filesystem::path& path, const Grid& grid,
                    const ConservedField& cons, double gamma) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw OutputError("cannot open " + path.string());

  const PrimitiveField prim = primitive_from_conserved(cons, gamma);
  const int dim = grid.dim();
  const char* idx_names[3] = {"i", "j", "k"};
  const char* coord_names[3] = {"x", "y", "z"};
  const char* mom_names[3] = {"mom_x", "mom_y", "mom_z"};
  const char* vel_names[3] = {"u", "v", "w"};

  for (int a = 0; a < dim; ++a) f << idx_names[a] << ',';
  for (int a = 0; a < dim; ++a) f << coord_names[a] << ',';
  f << "rho,";
  for (int a = 0; a < dim; ++a) f << mom_names[a] << ',';
  f << "ener,";
  for (int a = 0; a < dim; ++a) f << vel_names[a] << ',';
  f << "p,theta,s\n";

  for (std::int64_t c = 0; c < grid.cell_count(); ++c) {
    const auto cell = static_cast<std::int32_t>(c);
    const auto i = static_cast<std::size_t>(c);
    const auto coords = grid.cell_coords(cell);
    const Vec3 x = grid.cell_center(cell);
    for (int a = 0; a < dim; ++a) f << coords[static_cast<std::size_t>(a)] << ',';
    for (int a = 0; a < dim; ++a) f << format_g17(x[a]) << ',';
    f << format_g17(cons.rho[i]) << ',';
    for (int a = 0; a < dim; ++a) f << format_g17(cons.mom[i][a]) << ',';
    f << format_g17(cons.ener[i]) << ',';
    for (int a = 0; a < dim; ++a) f << format_g17(prim.vel[i][a]) << ',';
    f << format_g17(prim.pres[i]) << ',' << format_g17(prim.temp[i]) << ','
      << format_g17(prim.entr[i]) << '\n';
  }
  if (!f) throw OutputError("write failed: " + path.string());
}

void write_eoc(const std::filesystem::path& path, const std::vector<EocRow>& rows) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw OutputError("cannot open " + path.string());
  f << "h,l1_rho,l1_mom,l1_ener,eoc_rho,eoc_mom,eoc_ener,bv1,bv2,bv3\n";
  for (const auto& r : rows) {
    f << format_g17(r.h) << ',' << format_g17(r.l1_rho) << ',' << format_g17(r.l1_mom) << ','
      << format_g17(r.l1_ener) << ',' << format_g17(r.eoc_rho) << ',' << format_g17(r.eoc_mom)
      << ',' << format_g17(r.eoc_ener) << ',' << format_g17(r.bv.b1) << ',' << format_g17(r.bv.b2)
      << ',' << format_g17(r.bv.b3) << '\n';
  }
  if (!f) throw OutputError("write failed: " + path.string());
}

}  // namespace eulerfv
