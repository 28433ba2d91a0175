#include "eulerfv/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace eulerfv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(line, "expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(line, "expected an integer, got '" + v + "'");
  }
}

int axis_of_suffix(const std::string& key, const std::string& base, int line) {
  const std::string sfx = key.substr(base.size());
  if (sfx == ".x") return 0;
  if (sfx == ".y") return 1;
  if (sfx == ".z") return 2;
  throw ConfigError(line, "unknown axis suffix on '" + key + "'");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SchemeParams RunConfig::scheme_params() const {
  SchemeParams p;
  p.gamma = gamma;
  p.alpha = alpha;
  p.mu = mu;
  p.cfl = cfl;
  p.bc = bc;
  return p;
}

Grid RunConfig::build_grid() const {
  return Grid(dim, std::span<const int>(cells.data(), static_cast<std::size_t>(dim)),
              std::span<const double>(xmin.data(), static_cast<std::size_t>(dim)),
              std::span<const double>(xmax.data(), static_cast<std::size_t>(dim)), bc);
}

std::vector<std::array<int, 3>> RunConfig::refinement_ladder(int levels) const {
  std::vector<std::array<int, 3>> ladder;
  for (int k = 0; k < levels; ++k) {
    std::array<int, 3> c = cells;
    for (int a = 0; a < dim; ++a) c[static_cast<std::size_t>(a)] <<= k;
    ladder.push_back(c);
  }
  return ladder;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  bool saw_cells = false, saw_cells_axis = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;

    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string val = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "empty key");
    if (val.empty()) throw ConfigError(line, "empty value for '" + key + "'");

    if (key == "dim") {
      cfg.dim = parse_int(val, line);
      if (cfg.dim < 1 || cfg.dim > 3) throw ConfigError(line, "dim must be 1, 2 or 3");
    } else if (key == "cells") {
      const int c = parse_int(val, line);
      cfg.cells = {c, c, c};
      saw_cells = true;
    } else if (key.rfind("cells.", 0) == 0) {
      cfg.cells[static_cast<std::size_t>(axis_of_suffix(key, "cells", line))] =
          parse_int(val, line);
      saw_cells_axis = true;
    } else if (key == "xmin") {
      const double x = parse_double(val, line);
      cfg.xmin = {x, x, x};
    } else if (key.rfind("xmin.", 0) == 0) {
      cfg.xmin[static_cast<std::size_t>(axis_of_suffix(key, "xmin", line))] =
          parse_double(val, line);
    } else if (key == "xmax") {
      const double x = parse_double(val, line);
      cfg.xmax = {x, x, x};
    } else if (key.rfind("xmax.", 0) == 0) {
      cfg.xmax[static_cast<std::size_t>(axis_of_suffix(key, "xmax", line))] =
          parse_double(val, line);
    } else if (key == "bc") {
      if (val == "periodic")
        cfg.bc = BoundaryKind::periodic;
      else if (val == "wall")
        cfg.bc = BoundaryKind::wall;
      else
        throw ConfigError(line, "bc must be 'periodic' or 'wall'");
    } else if (key == "gamma") {
      cfg.gamma = parse_double(val, line);
      if (!(cfg.gamma > 1.0)) throw ConfigError(line, "gamma must be > 1");
    } else if (key == "alpha") {
      cfg.alpha = parse_double(val, line);
      if (!(cfg.alpha > 0.0 && cfg.alpha < 4.0 / 3.0))
        throw ConfigError(line, "alpha must lie in (0, 4/3)");
    } else if (key == "mu_mode") {
      if (val == "none")
        cfg.mu.mode = MuMode::none;
      else if (val == "power")
        cfg.mu.mode = MuMode::power;
      else if (val == "lf")
        cfg.mu.mode = MuMode::lax_friedrichs;
      else
        throw ConfigError(line, "mu_mode must be 'none', 'power' or 'lf'");
    } else if (key == "mu_c") {
      cfg.mu.c = parse_double(val, line);
      if (!(cfg.mu.c > 0.0)) throw ConfigError(line, "mu_c must be > 0");
    } else if (key == "mu_beta") {
      cfg.mu.beta = parse_double(val, line);
      if (!(cfg.mu.beta >= 0.0 && cfg.mu.beta < 1.0))
        throw ConfigError(line, "beta must lie in [0, 1)");
    } else if (key == "cfl") {
      cfg.cfl = parse_double(val, line);
      if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ConfigError(line, "cfl must lie in (0, 1]");
    } else if (key == "integrator") {
      if (val == "euler")
        cfg.integrator = Integrator::euler;
      else if (val == "ssprk2")
        cfg.integrator = Integrator::ssprk2;
      else if (val == "ssprk3")
        cfg.integrator = Integrator::ssprk3;
      else
        throw ConfigError(line, "integrator must be 'euler', 'ssprk2' or 'ssprk3'");
    } else if (key == "t_end") {
      cfg.t_end = parse_double(val, line);
      if (!(cfg.t_end >= 0.0)) throw ConfigError(line, "t_end must be >= 0");
    } else if (key == "ic") {
      cfg.ic = val;
    } else if (key.rfind("ic.", 0) == 0) {
      cfg.ic_params[key.substr(3)] = parse_double(val, line);
    } else if (key == "out_dir") {
      cfg.out_dir = val;
    } else if (key == "diag_every") {
      cfg.diag_every = parse_int(val, line);
      if (cfg.diag_every < 1) throw ConfigError(line, "diag_every must be >= 1");
    } else if (key == "snapshots") {
      cfg.snapshots.clear();
      std::istringstream list(val);
      std::string item;
      while (std::getline(list, item, ',')) {
        cfg.snapshots.push_back(parse_double(trim(item), line));
      }
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }

  if (!saw_cells && !saw_cells_axis) throw ConfigError(0, "missing required key 'cells'");
  // Inactive axes mirror axis 0 so equality and round-trips are well defined.
  for (int a = cfg.dim; a < 3; ++a) {
    const auto ia = static_cast<std::size_t>(a);
    cfg.cells[ia] = cfg.cells[0];
    cfg.xmin[ia] = cfg.xmin[0];
    cfg.xmax[ia] = cfg.xmax[0];
  }
  for (int a = 0; a < cfg.dim; ++a) {
    if (cfg.cells[static_cast<std::size_t>(a)] < 2)
      throw ConfigError(0, "cells must be >= 2 on every axis");
    if (!(cfg.xmax[static_cast<std::size_t>(a)] > cfg.xmin[static_cast<std::size_t>(a)]))
      throw ConfigError(0, "xmax must exceed xmin on every axis");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "dim = " << cfg.dim << "\n";

  const auto all_axes_equal = [&](const auto& arr) {
    for (int a = 1; a < cfg.dim; ++a)
      if (arr[static_cast<std::size_t>(a)] != arr[0]) return false;
    return true;
  };
  const char* sfx[3] = {".x", ".y", ".z"};

  if (all_axes_equal(cfg.cells)) {
    out << "cells = " << cfg.cells[0] << "\n";
  } else {
    for (int a = 0; a < cfg.dim; ++a)
      out << "cells" << sfx[a] << " = " << cfg.cells[static_cast<std::size_t>(a)] << "\n";
  }
  if (all_axes_equal(cfg.xmin)) {
    out << "xmin = " << format_double(cfg.xmin[0]) << "\n";
  } else {
    for (int a = 0; a < cfg.dim; ++a)
      out << "xmin" << sfx[a] << " = " << format_double(cfg.xmin[static_cast<std::size_t>(a)])
          << "\n";
  }
  if (all_axes_equal(cfg.xmax)) {
    out << "xmax = " << format_double(cfg.xmax[0]) << "\n";
  } else {
    for (int a = 0; a < cfg.dim; ++a)
      out << "xmax" << sfx[a] << " = " << format_double(cfg.xmax[static_cast<std::size_t>(a)])
          << "\n";
  }

  out << "bc = " << (cfg.bc == BoundaryKind::periodic ? "periodic" : "wall") << "\n";
  out << "gamma = " << format_double(cfg.gamma) << "\n";
  out << "alpha = " << format_double(cfg.alpha) << "\n";
  out << "mu_mode = "
      << (cfg.mu.mode == MuMode::none ? "none"
                                      : cfg.mu.mode == MuMode::power ? "power" : "lf")
      << "\n";
  out << "mu_c = " << format_double(cfg.mu.c) << "\n";
  out << "mu_beta = " << format_double(cfg.mu.beta) << "\n";
  out << "cfl = " << format_double(cfg.cfl) << "\n";
  out << "integrator = "
      << (cfg.integrator == Integrator::euler
              ? "euler"
              : cfg.integrator == Integrator::ssprk2 ? "ssprk2" : "ssprk3")
      << "\n";
  out << "t_end = " << format_double(cfg.t_end) << "\n";
  out << "ic = " << cfg.ic << "\n";
  for (const auto& [k, v] : cfg.ic_params) out << "ic." << k << " = " << format_double(v) << "\n";
  out << "out_dir = " << cfg.out_dir << "\n";
  out << "diag_every = " << cfg.diag_every << "\n";
  if (!cfg.snapshots.empty()) {
    out << "snapshots = ";
    for (std::size_t i = 0; i < cfg.snapshots.size(); ++i) {
      if (i) out << ",";
      out << format_double(cfg.snapshots[i]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace eulerfv
