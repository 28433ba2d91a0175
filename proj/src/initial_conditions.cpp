#include "eulerfv/initial_conditions.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "eulerfv/thermo.hpp"

namespace eulerfv {

namespace {

double get_or(const IcParams& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void reject_unknown(const std::string& name, const IcParams& params,
                    const std::set<std::string>& known) {
  for (const auto& [k, v] : params) {
    (void)v;
    if (!known.count(k))
      throw std::invalid_argument("initial condition '" + name + "': unknown parameter 'ic." + k +
                                  "'");
  }
}

ConservedField sample_solution(const ExactSolution& sol, const Grid& grid, double gamma) {
  const auto n = static_cast<std::size_t>(grid.cell_count());
  ConservedField out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PrimitiveSample s = sol.eval(0.0, grid.cell_center(static_cast<std::int32_t>(i)));
    out.rho[i] = s.rho;
    out.mom[i] = s.rho * s.vel;
    out.ener[i] = total_energy(s.rho, s.vel, s.pres, gamma);
  }
  return out;
}

}  // namespace

bool has_exact_solution(const std::string& name) {
  return name == "uniform" || name == "sod" || name == "contact_advection" ||
         name == "isentropic_vortex";
}

ExactSolution exact_solution_for(const std::string& name, const IcParams& params,
                                 const Grid& grid, double gamma) {
  if (name == "uniform") {
    reject_unknown(name, params, {"rho", "u", "v", "w", "p"});
    return uniform_solution(grid.dim(), get_or(params, "rho", 1.0),
                            Vec3{get_or(params, "u", 0.0), get_or(params, "v", 0.0),
                                 get_or(params, "w", 0.0)},
                            get_or(params, "p", 1.0));
  }
  if (name == "sod") {
    reject_unknown(name, params, {"x0"});
    const double x0 = get_or(params, "x0", 0.5 * (grid.lo(0) + grid.hi(0)));
    return riemann_exact_solution({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, gamma, x0);
  }
  if (name == "contact_advection") {
    reject_unknown(name, params, {"amplitude"});
    return contact_advection_solution(grid.lo(0), grid.extent(0),
                                      get_or(params, "amplitude", 0.5));
  }
  if (name == "isentropic_vortex") {
    reject_unknown(name, params, {"beta", "radius"});
    if (grid.dim() != 2)
      throw std::invalid_argument("isentropic_vortex requires a 2D grid");
    const Vec3 lo{grid.lo(0), grid.lo(1), 0.0};
    const Vec3 len{grid.extent(0), grid.extent(1), 0.0};
    return isentropic_vortex_solution(gamma, lo, len, get_or(params, "beta", 5.0),
                                      get_or(params, "radius", 0.1));
  }
  throw std::invalid_argument("no exact solution for initial condition '" + name + "'");
}

ConservedField initial_condition(const std::string& name, const IcParams& params,
                                 const Grid& grid, double gamma) {
  ConservedField out;
  if (has_exact_solution(name)) {
    out = sample_solution(exact_solution_for(name, params, grid, gamma), grid, gamma);
  } else if (name == "random_admissible") {
    reject_unknown(name, params, {"seed", "umax"});
    const auto seed = static_cast<std::uint64_t>(get_or(params, "seed", 1.0));
    const double umax = get_or(params, "umax", 0.5);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rho(0.5, 2.0);
    std::uniform_real_distribution<double> pres(0.5, 2.0);
    std::uniform_real_distribution<double> vel(-umax, umax);
    const auto n = static_cast<std::size_t>(grid.cell_count());
    out = ConservedField(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = rho(rng);
      Vec3 u;
      for (int a = 0; a < grid.dim(); ++a) u[a] = vel(rng);
      const double p = pres(rng);
      out.rho[i] = r;
      out.mom[i] = r * u;
      out.ener[i] = total_energy(r, u, p, gamma);
    }
  } else {
    throw std::invalid_argument("unknown initial condition '" + name + "'");
  }

  if (auto v = find_inadmissible(out, gamma)) throw AdmissibilityError(*v);
  return out;
}

}  // namespace eulerfv
