#include "cpsplit/solver1d.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cpsplit;

namespace {

const GasModel kGas(1.4);

Vec3 totals(const std::vector<Primitive>& w, double dx) {
  Vec3 s = Vec3::Zero();
  for (const Primitive& p : w) s += prim_to_cons(p, kGas) * dx;
  return s;
}

std::vector<Primitive> wave(const Grid1D& g) {
  std::vector<Primitive> w(g.n_cells);
  for (int i = 0; i < g.n_cells; ++i) {
    const double x = g.center(i);
    w[i] = {1.0 + 0.3 * std::sin(2.0 * std::numbers::pi * x), 0.4 * std::cos(2.0 * std::numbers::pi * x),
            1.0 + 0.2 * std::sin(4.0 * std::numbers::pi * x)};
  }
  return w;
}

}  // namespace

TEST_CASE("limited slope properties") {
  const double eps2 = 1e-9;
  CHECK(limited_slope(0.0, 0.0, eps2) == 0.0);
  CHECK(limited_slope(0.0, 0.0, 0.0) == 0.0);
  CHECK(limited_slope(0.3, 0.3, eps2) == doctest::Approx(0.3));
  CHECK(limited_slope(0.2, 0.5, eps2) == doctest::Approx(limited_slope(0.5, 0.2, eps2)));
  CHECK(limited_slope(-0.2, -0.5, eps2) == doctest::Approx(-limited_slope(0.2, 0.5, eps2)));
  const double s = limited_slope(0.2, 0.5, 0.0);
  CHECK(s > 0.2);
  CHECK(s < 0.5);
  // With a large eps2 the slope approaches the central average.
  CHECK(limited_slope(0.2, 0.5, 1e6) == doctest::Approx(0.35).epsilon(1e-6));
  // Opposite signs at extrema are damped well below either difference.
  CHECK(std::abs(limited_slope(1.0, -1.0, 0.0)) < 1e-15);
}

TEST_CASE("linear data is reconstructed exactly") {
  std::vector<double> v;
  for (int i = 0; i < 10; ++i) v.push_back(2.0 + 0.5 * i);
  const FaceValues f = muscl_reconstruct(v, 0.1, 0.1);
  for (int i = 1; i < 9; ++i) {
    CHECK(f.minus[i] == doctest::Approx(v[i] - 0.25));
    CHECK(f.plus[i] == doctest::Approx(v[i] + 0.25));
  }
  CHECK(f.minus[0] == v[0]);
  CHECK(f.plus[9] == v[9]);
}

TEST_CASE("time step from the CFL condition") {
  const std::vector<Primitive> w{{1.0, 0.5, 1.0}, {1.0, -2.0, 1.4}};
  const double smax = 2.0 + std::sqrt(1.4 * 1.4);
  CHECK(compute_dt(w, kGas, 0.1, 0.8) == doctest::Approx(0.8 * 0.1 / smax));
}

TEST_CASE("periodic runs conserve mass, momentum and energy") {
  const Grid1D g(0.0, 1.0, 64);
  for (SchemeKind s : {SchemeKind::ZbsFds, SchemeKind::TvsFds}) {
    for (int order : {1, 2}) {
      Solver1DConfig cfg;
      cfg.scheme = s;
      cfg.recon.order = order;
      cfg.bc = {Boundary::Periodic, Boundary::Periodic};
      cfg.time.t_final = 0.2;
      cfg.time.cfl = 0.5;
      const auto w0 = wave(g);
      const Result1D r = advance(g, w0, cfg, kGas);
      CHECK(r.completed);
      CHECK(r.time == doctest::Approx(0.2));
      const Vec3 d = totals(r.w, g.dx()) - totals(w0, g.dx());
      CHECK(d.cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("reflective walls conserve mass and energy") {
  const Grid1D g(0.0, 1.0, 50);
  Solver1DConfig cfg;
  cfg.bc = {Boundary::Reflective, Boundary::Reflective};
  cfg.time.t_final = 0.3;
  std::vector<Primitive> w0(50, Primitive{1.0, 0.0, 1.0});
  for (int i = 0; i < 10; ++i) w0[i].p = 5.0;
  const Result1D r = advance(g, w0, cfg, kGas);
  const Vec3 a = totals(w0, g.dx()), b = totals(r.w, g.dx());
  CHECK(b[0] == doctest::Approx(a[0]).epsilon(1e-13));
  CHECK(b[2] == doctest::Approx(a[2]).epsilon(1e-13));
}

TEST_CASE("a stationary contact is kept exactly") {
  const Grid1D g(0.0, 1.0, 40);
  for (SchemeKind s : {SchemeKind::ZbsFds, SchemeKind::TvsFds}) {
    Solver1DConfig cfg;
    cfg.scheme = s;
    cfg.recon.order = 2;
    cfg.time.t_final = 1.0;
    std::vector<Primitive> w0(40);
    for (int i = 0; i < 40; ++i) w0[i] = {i < 20 ? 1.4 : 1.0, 0.0, 1.0};
    const Result1D r = advance(g, w0, cfg, kGas);
    for (int i = 0; i < 40; ++i) {
      CHECK(r.w[i].rho == w0[i].rho);
      CHECK(r.w[i].u == 0.0);
      CHECK(r.w[i].p == 1.0);
    }
  }
}

TEST_CASE("snapshots and step limits") {
  const Grid1D g(0.0, 1.0, 32);
  Solver1DConfig cfg;
  cfg.bc = {Boundary::Periodic, Boundary::Periodic};
  cfg.time.t_final = 0.1;
  cfg.snapshot_times = {0.05, 0.2, -1.0};
  const Result1D r = advance(g, wave(g), cfg, kGas);
  REQUIRE(r.snapshots.size() == 1);
  CHECK(r.snapshots[0].time == doctest::Approx(0.05));

  cfg.time.max_steps = 3;
  const Result1D s = advance(g, wave(g), cfg, kGas);
  CHECK_FALSE(s.completed);
  CHECK(s.steps == 3);
  CHECK(s.time < 0.1);

  cfg.time.max_steps = 10'000;
  cfg.time.fixed_dt = 0.003;
  cfg.snapshot_times.clear();
  const Result1D f = advance(g, wave(g), cfg, kGas);
  CHECK(f.dt_max == doctest::Approx(0.003));
  CHECK(f.time == doctest::Approx(0.1));
}

TEST_CASE("invalid configurations are rejected") {
  const Grid1D g(0.0, 1.0, 16);
  const std::vector<Primitive> w(16);
  Solver1DConfig cfg;
  cfg.time.t_final = 0.1;
  cfg.recon.order = 3;
  CHECK_THROWS_AS(advance(g, w, cfg, kGas), std::invalid_argument);
  cfg.recon.order = 1;
  cfg.bc.left = Boundary::Periodic;
  CHECK_THROWS_AS(advance(g, w, cfg, kGas), std::invalid_argument);
  cfg.bc.left = Boundary::Transmissive;
  cfg.time.cfl = 1.5;
  CHECK_THROWS_AS(advance(g, w, cfg, kGas), std::invalid_argument);
  cfg.time.cfl = 0.5;
  CHECK_THROWS_AS(advance(g, std::vector<Primitive>(15), cfg, kGas), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 3), std::invalid_argument);
  std::vector<Primitive> bad(16);
  bad[5].p = -1.0;
  CHECK_THROWS_AS(advance(g, bad, cfg, kGas), NonPhysicalState);
}

TEST_CASE("blow-up reports step, cell and time") {
  // Two strong diverging streams open a near-vacuum that drives the first-order TVS scheme negative.
  const Grid1D g(0.0, 1.0, 100);
  Solver1DConfig cfg;
  cfg.scheme = SchemeKind::TvsFds;
  cfg.time.t_final = 0.5;
  cfg.time.cfl = 0.9;
  std::vector<Primitive> w0(100);
  for (int i = 0; i < 100; ++i) w0[i] = {1.0, i < 50 ? -20.0 : 20.0, 0.01};
  try {
    advance(g, w0, cfg, kGas);
    CHECK(false);
  } catch (const SolverBlowUp& e) {
    CHECK(e.step() >= 0);
    CHECK(e.cell() >= 0);
    CHECK(e.cell() < 100);
    CHECK(e.time() >= 0.0);
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
}
