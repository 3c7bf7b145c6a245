#pragma once

// 2D benchmark problems and their grid generators.

#include "cpsplit/solver2d.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cpsplit {

struct Case2D {
  std::string name;
  std::string summary;
  std::function<StructuredGrid2D(int, int)> make_grid;
  int default_ni = 0;
  int default_nj = 0;
  /// Grids shown in the reference figures.
  std::vector<std::pair<int, int>> figure_grids;
  Boundaries2D bc;
  std::function<Prim2D(const Point2&)> initial;
  double t_final = 0.0;
  double cfl = 0.5;
  /// Non-zero for steady problems: stop after this residual drop.
  double steady_drop = 0.0;
  /// Plotted variable and contour levels "lo:step:hi"; empty when unknown.
  std::string contour_variable;
  std::string contour_levels;
};

/// Four problems: shock-reflection, ramp, wedge and half-cylinder (Mach 20).
std::vector<Case2D> case_registry_2d();
/// Throws std::invalid_argument for an unknown name.
Case2D find_case_2d(const std::string& name);

Case2D shock_reflection_case();
Case2D ramp_case();
Case2D wedge_case();
Case2D half_cylinder_case(double mach);

/// Sheared grid over [x0,x1] x [h(x), y_top].
StructuredGrid2D sheared_grid(double x0, double x1, double y_top,
                              const std::function<double(double)>& bottom, int ni, int nj);

/// Body-fitted grid between the unit half circle (angles pi/2..3pi/2) and an
/// ellipse with semi-axes (ax, ay); i runs outward, j along the body.
StructuredGrid2D half_cylinder_grid(int ni, int nj, double ax = 2.5, double ay = 4.5);

/// Upstream/downstream states of a normal shock of Mach number `ms` moving
/// into gas at rest.
Prim2D moving_shock_state(const Prim2D& at_rest, double ms, const GasModel& gas);

std::vector<Prim2D> initial_cells_2d(const Case2D& c, const StructuredGrid2D& grid);

/// Pressure along the middle grid line j = nj/2 (averaging the two central
/// lines when nj is even), ordered from the outer boundary to the wall.
std::vector<double> stagnation_line_pressure(const StructuredGrid2D& grid,
                                             const std::vector<Prim2D>& w);

struct PostShockCheck {
  int cells = 0;
  double mean = 0.0;
  /// Largest |p - target| / target over the sampled cells.
  double worst = 0.0;
};

/// Pressure behind the incident shock of the shock-reflection case, sampled
/// in cells with 0.5 <= x <= 1.5, y <= 0.9 and at least `margin` downstream
/// of the 29 deg shock line through (0, 1).
PostShockCheck incident_shock_pressure(const StructuredGrid2D& grid, const std::vector<Prim2D>& w,
                                       double target = 1.52819, double margin = 0.1);

/// True when no entry drops below its predecessor by more than rel_tol
/// relative to the predecessor's magnitude. The default only forgives
/// rounding noise in uniform regions.
bool nondecreasing(const std::vector<double>& v, double rel_tol = 1e-12);

}  // namespace cpsplit
