#include "cpsplit/cases2d.hpp"
#include "cpsplit/solver2d.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace cpsplit;

namespace {

const GasModel kGas(1.4);

Vec4 totals(const StructuredGrid2D& g, const std::vector<Prim2D>& w) {
  Vec4 s = Vec4::Zero();
  for (int j = 0; j < g.nj(); ++j)
    for (int i = 0; i < g.ni(); ++i) s += prim_to_cons(w[g.cell_index(i, j)], kGas) * g.area(i, j);
  return s;
}

Boundaries2D all(Bc2D b) { return {b, b, b, b}; }

}  // namespace

TEST_CASE("cartesian grid geometry") {
  const auto g = StructuredGrid2D::cartesian(0.0, 2.0, 0.0, 1.0, 4, 2);
  CHECK(g.cell_count() == 8);
  CHECK(g.area(1, 1) == doctest::Approx(0.25));
  CHECK(g.centroid(0, 0).x == doctest::Approx(0.25));
  CHECK(g.centroid(0, 0).y == doctest::Approx(0.25));
  CHECK(g.iface(0, 0).nx == doctest::Approx(1.0));
  CHECK(g.jface(0, 0).ny == doctest::Approx(1.0));
  CHECK(g.iface(2, 1).ds == doctest::Approx(0.5));
  const auto r = g.rotated_quarter_turn();
  CHECK(r.vertex(1, 0).x == doctest::Approx(0.0));
  CHECK(r.vertex(1, 0).y == doctest::Approx(0.5));
  CHECK(r.area(1, 1) == doctest::Approx(0.25));
  // Clockwise vertices give a negative area.
  CHECK_THROWS_AS(StructuredGrid2D(1, 1, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("cell normals close on curved grids") {
  const auto g = half_cylinder_grid(8, 12);
  for (int j = 0; j < g.nj(); ++j) {
    for (int i = 0; i < g.ni(); ++i) {
      CHECK(g.area(i, j) > 0.0);
      const FaceGeometry& w = g.iface(i, j);
      const FaceGeometry& e = g.iface(i + 1, j);
      const FaceGeometry& s = g.jface(i, j);
      const FaceGeometry& n = g.jface(i, j + 1);
      const double sx = e.nx * e.ds - w.nx * w.ds + n.nx * n.ds - s.nx * s.ds;
      const double sy = e.ny * e.ds - w.ny * w.ds + n.ny * n.ds - s.ny * s.ds;
      CHECK(std::abs(sx) < 1e-14);
      CHECK(std::abs(sy) < 1e-14);
    }
  }
  // The body is the unit circle.
  CHECK(std::hypot(g.vertex(0, 3).x, g.vertex(0, 3).y) == doctest::Approx(1.0));
}

TEST_CASE("slip wall ghost mirrors the normal velocity") {
  const Prim2D a = slip_wall_ghost({1.0, 1.0, 0.0, 1.0}, {0.0, 1.0, 1.0});
  CHECK(a.u == doctest::Approx(1.0));
  CHECK(a.v == doctest::Approx(0.0));
  const FaceGeometry n{std::cos(0.3), std::sin(0.3), 1.0};
  const Prim2D in{1.2, 0.7, -0.4, 2.0};
  const Prim2D b = slip_wall_ghost(in, n);
  CHECK(b.rho == in.rho);
  CHECK(b.p == in.p);
  CHECK((b.u + in.u) * n.nx + (b.v + in.v) * n.ny == doctest::Approx(0.0));
  CHECK(b.u * b.u + b.v * b.v == doctest::Approx(in.u * in.u + in.v * in.v));
}

TEST_CASE("time step estimate") {
  const auto g = StructuredGrid2D::cartesian(0.0, 1.0, 0.0, 1.0, 2, 2);
  const std::vector<Prim2D> w(4, Prim2D{1.4, 0.0, 0.0, 1.0});
  // Each cell has four faces of length 0.5 and a = 1.
  CHECK(compute_dt_2d(g, w, kGas, 0.5) == doctest::Approx(0.5 * 0.25 / 2.0));
}

TEST_CASE("free stream is preserved on curved grids") {
  const auto g = half_cylinder_grid(10, 16);
  const Prim2D free{1.4, 2.0, 0.5, 1.0};
  const std::vector<Prim2D> w0(g.cell_count(), free);
  for (int order : {1, 2}) {
    Solver2DConfig cfg;
    cfg.order = order;
    cfg.t_final = 1.0;
    cfg.max_steps = 10;
    const Result2D r = advance_2d(g, w0, all({Bc2DKind::SupersonicInflow, free}), cfg, kGas);
    CHECK(r.steps == 10);
    for (const Prim2D& w : r.w) {
      CHECK(std::abs(w.rho - free.rho) < 1e-12);
      CHECK(std::abs(w.u - free.u) < 1e-12);
      CHECK(std::abs(w.v - free.v) < 1e-12);
      CHECK(std::abs(w.p - free.p) < 1e-12);
    }
  }
}

TEST_CASE("closed box conserves mass and energy") {
  const auto g = sheared_grid(0.0, 1.0, 1.0, [](double x) { return 0.1 * std::sin(3.0 * x); }, 16, 12);
  std::vector<Prim2D> w0(g.cell_count());
  for (int j = 0; j < g.nj(); ++j)
    for (int i = 0; i < g.ni(); ++i) {
      const Point2 c = g.centroid(i, j);
      w0[g.cell_index(i, j)] = {1.0 + 0.3 * c.x, 0.1, -0.2, c.y < 0.4 ? 3.0 : 1.0};
    }
  Solver2DConfig cfg;
  cfg.order = 2;
  cfg.t_final = 0.1;
  const Result2D r = advance_2d(g, w0, all({Bc2DKind::SlipWall, {}}), cfg, kGas);
  CHECK(r.completed);
  const Vec4 a = totals(g, w0), b = totals(g, r.w);
  CHECK(b[0] == doctest::Approx(a[0]).epsilon(1e-13));
  CHECK(b[3] == doctest::Approx(a[3]).epsilon(1e-13));
}

TEST_CASE("a 1D problem on a strip matches the 1D solver") {
  const int n = 50;
  const auto g = StructuredGrid2D::cartesian(0.0, 1.0, 0.0, 0.04, n, 2);
  std::vector<Prim2D> w2(g.cell_count());
  std::vector<Primitive> w1(n);
  for (int i = 0; i < n; ++i) {
    w1[i] = i < n / 2 ? Primitive{1.0, 0.0, 1.0} : Primitive{0.125, 0.0, 0.1};
    for (int j = 0; j < 2; ++j) w2[g.cell_index(i, j)] = {w1[i].rho, w1[i].u, 0.0, w1[i].p};
  }
  Solver1DConfig c1;
  c1.time.t_final = 0.1;
  c1.time.fixed_dt = 0.002;
  const Result1D r1 = advance(Grid1D(0.0, 1.0, n), w1, c1, kGas);
  Solver2DConfig c2;
  c2.t_final = 0.1;
  c2.fixed_dt = 0.002;
  Boundaries2D bc{{Bc2DKind::SupersonicOutflow, {}}, {Bc2DKind::SupersonicOutflow, {}}, {Bc2DKind::SlipWall, {}},
                  {Bc2DKind::SlipWall, {}}};
  const Result2D r2 = advance_2d(g, w2, bc, c2, kGas);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Prim2D& w = r2.w[g.cell_index(i, j)];
      CHECK(std::abs(w.rho - r1.w[i].rho) < 1e-12);
      CHECK(std::abs(w.u - r1.w[i].u) < 1e-12);
      CHECK(std::abs(w.v) < 1e-12);
      CHECK(std::abs(w.p - r1.w[i].p) < 1e-12);
    }
  }
}

TEST_CASE("moving shock relations") {
  const Prim2D rest{1.4, 0.0, 0.0, 1.0};
  const Prim2D post = moving_shock_state(rest, 5.5, kGas);
  const double s = 5.5 * sound_speed(rest, kGas);
  // Mass, momentum and energy fluxes agree in the shock frame.
  const double m1 = rest.rho * (rest.u - s), m2 = post.rho * (post.u - s);
  CHECK(m2 == doctest::Approx(m1));
  CHECK(m2 * (post.u - s) + post.p == doctest::Approx(m1 * (rest.u - s) + rest.p));
  const double h1 = 3.5 * rest.p / rest.rho + 0.5 * s * s;
  const double h2 = 3.5 * post.p / post.rho + 0.5 * (post.u - s) * (post.u - s);
  CHECK(h2 == doctest::Approx(h1));
  CHECK(post.v == 0.0);
}

TEST_CASE("2D case registry") {
  std::set<std::string> names;
  for (const Case2D& c : case_registry_2d()) {
    names.insert(c.name);
    CHECK(c.t_final > 0.0);
    CHECK_FALSE(c.figure_grids.empty());
    const auto g = c.make_grid(12, 8);
    for (const Prim2D& w : initial_cells_2d(c, g)) CHECK(is_physical(w));
  }
  CHECK(names == std::set<std::string>{"shock-reflection", "ramp", "wedge", "half-cylinder"});
  CHECK_THROWS_AS(find_case_2d("cylinder"), std::invalid_argument);
  CHECK_THROWS_AS(half_cylinder_case(0.5), std::invalid_argument);
}

TEST_CASE("stagnation line ordering and monotonicity") {
  const auto g = half_cylinder_grid(3, 4);
  std::vector<Prim2D> w(g.cell_count());
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 3; ++i) w[g.cell_index(i, j)].p = 10.0 - i + 0.1 * j;
  const auto p = stagnation_line_pressure(g, w);
  REQUIRE(p.size() == 3);
  CHECK(p.front() == doctest::Approx(8.15));
  CHECK(p.back() == doctest::Approx(10.15));
  CHECK(nondecreasing(p));
  CHECK_FALSE(nondecreasing({1.0, 2.0, 1.5}));
  // Free-stream rounding noise is not a decrease; a real dip is.
  CHECK(nondecreasing({1.0000000000000453, 1.0000000000000224, 8.7}));
  CHECK_FALSE(nondecreasing({1.0, 1.0 - 1e-9, 8.7}));
  CHECK_FALSE(nondecreasing({1.0, 1.0 - 1e-13, 8.7}, 0.0));
}

TEST_CASE("shock reflection reaches a steady state") {
  const Case2D c = shock_reflection_case();
  const auto g = c.make_grid(60, 20);
  Solver2DConfig cfg;
  cfg.cfl = c.cfl;
  cfg.t_final = c.t_final;
  cfg.steady_drop = c.steady_drop;
  const Result2D r = advance_2d(g, initial_cells_2d(c, g), c.bc, cfg, kGas);
  CHECK(r.steady);
  CHECK(r.residual.back() <= 1e-4 * *std::max_element(r.residual.begin(), r.residual.end()));
  const PostShockCheck ps = incident_shock_pressure(g, r.w);
  CHECK(ps.cells > 0);
  // The coarse grid smears the shock into the sample region; the mean still
  // sits close to the oblique-shock value.
  CHECK(std::abs(ps.mean - 1.52819) < 0.03 * 1.52819);
}

TEST_CASE("order-one blow-up carries the cell index") {
  const auto g = StructuredGrid2D::cartesian(0.0, 1.0, 0.0, 1.0, 4, 4);
  std::vector<Cons2D> q(16, prim_to_cons(Prim2D{1.0, 0.0, 0.0, 1.0}, kGas));
  q[5][3] = -1.0;
  Solver2DConfig cfg;
  try {
    fv_step_2d(g, q, all({Bc2DKind::SlipWall, {}}), cfg, kGas, 1e-3, 7, 0.5);
    CHECK(false);
  } catch (const SolverBlowUp& e) {
    CHECK(e.cell() == 5);
    CHECK(e.step() == 7);
    CHECK(e.time() == 0.5);
  }
}
