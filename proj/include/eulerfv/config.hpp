#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "eulerfv/grid.hpp"
#include "eulerfv/params.hpp"
#include "eulerfv/timeloop.hpp"

namespace eulerfv {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A complete run description, parsed from flat `key = value` text.
/// parse(serialize(c)) == c holds bit-identically.
struct RunConfig {
  int dim = 1;
  std::array<int, 3> cells{100, 100, 100};
  std::array<double, 3> xmin{0.0, 0.0, 0.0};
  std::array<double, 3> xmax{1.0, 1.0, 1.0};
  BoundaryKind bc = BoundaryKind::periodic;
  double gamma = 1.4;
  double alpha = 1.0;
  MuSpec mu{};
  double cfl = 0.3;
  Integrator integrator = Integrator::ssprk2;
  double t_end = 0.0;
  std::string ic = "uniform";
  std::map<std::string, double> ic_params;  // ordered: canonical serialization
  std::string out_dir = "out";
  int diag_every = 10;
  std::vector<double> snapshots;

  SchemeParams scheme_params() const;
  Grid build_grid() const;

  /// Resolutions h, h/2, h/4, ... for mesh-convergence studies.
  std::vector<std::array<int, 3>> refinement_ladder(int levels) const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parse `key = value` lines ('#' starts a comment). Unknown keys, malformed
/// lines, and parameter-range violations are errors carrying the line number.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

std::string serialize_config(const RunConfig& cfg);

}  // namespace eulerfv
