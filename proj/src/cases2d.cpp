#include "cpsplit/cases2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cpsplit {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

Bc2D inflow(const Prim2D& w) { return {Bc2DKind::SupersonicInflow, w}; }
Bc2D outflow() { return {Bc2DKind::SupersonicOutflow, {}}; }
Bc2D wall() { return {Bc2DKind::SlipWall, {}}; }
Bc2D dirichlet(const Prim2D& w) { return {Bc2DKind::PostShockDirichlet, w}; }

}  // namespace

StructuredGrid2D sheared_grid(double x0, double x1, double y_top,
                              const std::function<double(double)>& bottom, int ni, int nj) {
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(ni + 1) * (nj + 1));
  for (int j = 0; j <= nj; ++j) {
    for (int i = 0; i <= ni; ++i) {
      const double x = x0 + (x1 - x0) * i / ni;
      const double h = bottom(x);
      v.push_back({x, h + (y_top - h) * j / nj});
    }
  }
  return StructuredGrid2D(ni, nj, std::move(v));
}

StructuredGrid2D half_cylinder_grid(int ni, int nj, double ax, double ay) {
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(ni + 1) * (nj + 1));
  for (int j = 0; j <= nj; ++j) {
    const double th = 0.5 * std::numbers::pi + std::numbers::pi * j / nj;
    const double c = std::cos(th), s = std::sin(th);
    for (int i = 0; i <= ni; ++i) {
      const double f = static_cast<double>(i) / ni;
      v.push_back({c + f * (ax * c - c), s + f * (ay * s - s)});
    }
  }
  return StructuredGrid2D(ni, nj, std::move(v));
}

Prim2D moving_shock_state(const Prim2D& at_rest, double ms, const GasModel& gas) {
  const double g = gas.gamma(), m2 = ms * ms;
  const double a = sound_speed(at_rest, gas);
  const double p = at_rest.p * (2.0 * g * m2 - (g - 1.0)) / (g + 1.0);
  const double rho = at_rest.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);
  const double u = 2.0 * a * (m2 - 1.0) / ((g + 1.0) * ms);
  return {rho, u, 0.0, p};
}

Case2D shock_reflection_case() {
  Case2D c;
  c.name = "shock-reflection";
  c.summary = "oblique shock (29 deg, M=2.9) reflecting from a flat wall";
  c.make_grid = [](int ni, int nj) { return StructuredGrid2D::cartesian(0.0, 3.0, 0.0, 1.0, ni, nj); };
  c.default_ni = 120;
  c.default_nj = 40;
  c.figure_grids = {{120, 40}, {240, 80}};
  const Prim2D in{1.0, 2.9, 0.0, 1.0 / 1.4};
  c.bc = {inflow(in), outflow(), wall(), dirichlet({1.69997, 2.61934, -0.50633, 1.52819})};
  c.initial = [in](const Point2&) { return in; };
  c.t_final = 20.0;
  c.steady_drop = 1e-4;
  c.contour_variable = "p";
  c.contour_levels = "0.7:0.1:2.9";
  return c;
}

Case2D ramp_case() {
  Case2D c;
  c.name = "ramp";
  c.summary = "M=2 channel flow over a 15 deg compression ramp";
  const double foot = 0.5, length = 1.0, rise = std::tan(15.0 * kDeg);
  c.make_grid = [=](int ni, int nj) {
    return sheared_grid(0.0, 3.0, 1.0,
                        [=](double x) { return x <= foot ? 0.0 : std::min(x - foot, length) * rise; },
                        ni, nj);
  };
  c.default_ni = 120;
  c.default_nj = 40;
  c.figure_grids = {{120, 40}, {240, 80}};
  const Prim2D in{1.4, 2.0, 0.0, 1.0};
  c.bc = {inflow(in), outflow(), wall(), wall()};
  c.initial = [in](const Point2&) { return in; };
  c.t_final = 20.0;
  c.steady_drop = 1e-4;
  c.contour_variable = "p";
  c.contour_levels = "1.1:0.05:3.8";
  return c;
}

Case2D wedge_case() {
  Case2D c;
  c.name = "wedge";
  c.summary = "Mach 5.5 plane shock reflecting from a 30 deg wedge";
  const double x0 = 0.25, rise = std::tan(30.0 * kDeg);
  c.make_grid = [=](int ni, int nj) {
    return sheared_grid(0.0, 2.0, 1.5, [=](double x) { return x <= x0 ? 0.0 : (x - x0) * rise; }, ni,
                        nj);
  };
  c.default_ni = 400;
  c.default_nj = 400;
  c.figure_grids = {{400, 400}};
  const GasModel gas(1.4);
  const Prim2D rest{1.4, 0.0, 0.0, 1.0};
  const Prim2D post = moving_shock_state(rest, 5.5, gas);
  c.bc = {inflow(post), outflow(), wall(), wall()};
  c.initial = [=](const Point2& p) { return p.x < x0 ? post : rest; };
  c.t_final = 0.25;
  c.contour_variable = "rho";
  return c;
}

Case2D half_cylinder_case(double mach) {
  if (!(mach > 1.0)) throw std::invalid_argument("half-cylinder needs a supersonic Mach number");
  Case2D c;
  c.name = "half-cylinder";
  std::ostringstream os;
  os << "hypersonic flow past a half cylinder, M=" << mach;
  c.summary = os.str();
  c.make_grid = [](int ni, int nj) { return half_cylinder_grid(ni, nj); };
  c.default_ni = 45;
  c.default_nj = 45;
  c.figure_grids = {{45, 45}, {20, 320}};
  const Prim2D free{1.4, mach, 0.0, 1.0};
  c.bc = {wall(), inflow(free), outflow(), outflow()};
  c.initial = [free](const Point2&) { return free; };
  // Forty body radii of free-stream travel.
  c.t_final = 40.0 / mach;
  c.contour_variable = "rho";
  c.contour_levels = "2.0:0.2:5.0";
  return c;
}

std::vector<Case2D> case_registry_2d() {
  return {shock_reflection_case(), ramp_case(), wedge_case(), half_cylinder_case(20.0)};
}

Case2D find_case_2d(const std::string& name) {
  for (auto& c : case_registry_2d())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown 2D case '" + name + "'");
}

std::vector<Prim2D> initial_cells_2d(const Case2D& c, const StructuredGrid2D& grid) {
  std::vector<Prim2D> w(grid.cell_count());
  for (int j = 0; j < grid.nj(); ++j)
    for (int i = 0; i < grid.ni(); ++i) w[grid.cell_index(i, j)] = c.initial(grid.centroid(i, j));
  return w;
}

std::vector<double> stagnation_line_pressure(const StructuredGrid2D& grid,
                                             const std::vector<Prim2D>& w) {
  const int nj = grid.nj();
  std::vector<double> p;
  for (int i = grid.ni() - 1; i >= 0; --i) {
    if (nj % 2 == 1) {
      p.push_back(w[grid.cell_index(i, nj / 2)].p);
    } else {
      p.push_back(0.5 * (w[grid.cell_index(i, nj / 2 - 1)].p + w[grid.cell_index(i, nj / 2)].p));
    }
  }
  return p;
}

PostShockCheck incident_shock_pressure(const StructuredGrid2D& grid, const std::vector<Prim2D>& w,
                                       double target, double margin) {
  const double s = std::sin(29.0 * kDeg), c = std::cos(29.0 * kDeg);
  PostShockCheck out;
  double sum = 0.0;
  for (int j = 0; j < grid.nj(); ++j) {
    for (int i = 0; i < grid.ni(); ++i) {
      const Point2 p = grid.centroid(i, j);
      // Signed distance above the line y = 1 - x tan(29 deg).
      const double d = p.x * s + (p.y - 1.0) * c;
      if (p.x < 0.5 || p.x > 1.5 || p.y > 0.9 || d < margin) continue;
      const double pr = w[grid.cell_index(i, j)].p;
      ++out.cells;
      sum += pr;
      out.worst = std::max(out.worst, std::abs(pr - target) / target);
    }
  }
  if (out.cells > 0) out.mean = sum / out.cells;
  return out;
}

bool nondecreasing(const std::vector<double>& v, double rel_tol) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] < v[k - 1] - rel_tol * std::abs(v[k - 1])) return false;
  return true;
}

}  // namespace cpsplit
