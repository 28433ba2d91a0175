#pragma once

#include <map>
#include <string>

#include "eulerfv/exact_solutions.hpp"
#include "eulerfv/grid.hpp"

namespace eulerfv {

using IcParams = std::map<std::string, double>;

/// Named initial-condition presets, sampled at cell midpoints:
///   uniform             rho, u/v/w, p (defaults 1, 0, 1)
///   sod                 left (1, 0, 1) / right (0.125, 0, 0.1), interface x0
///   contact_advection   rho = 1 + amplitude sin(2 pi x), u = 1, p = 1
///   isentropic_vortex   2D vortex, parameters beta and radius
///   random_admissible   iid admissible cells from `seed`
/// Unknown preset names or parameters are errors; the result is checked
/// admissible before it is returned.
ConservedField initial_condition(const std::string& name, const IcParams& params,
                                 const Grid& grid, double gamma);

/// The analytic solution matching a preset, when one exists (uniform, sod,
/// contact_advection, isentropic_vortex). Throws for presets without one.
ExactSolution exact_solution_for(const std::string& name, const IcParams& params,
                                 const Grid& grid, double gamma);

bool has_exact_solution(const std::string& name);

}  // namespace eulerfv
