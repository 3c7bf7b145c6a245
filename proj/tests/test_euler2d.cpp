#include "cpsplit/euler2d.hpp"
#include "cpsplit/fds.hpp"
#include "cpsplit/jordan.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

using namespace cpsplit;

namespace {

const GasModel kGas(1.4);

FaceGeometry unit_normal(double angle) { return {std::cos(angle), std::sin(angle), 1.0}; }

struct Gen2D {
  std::mt19937_64 rng{5};
  std::uniform_real_distribution<double> d{0.2, 4.0}, v{-2.0, 2.0}, ang{0.0, 2.0 * std::numbers::pi};
  Prim2D state() { return {d(rng), v(rng), v(rng), d(rng)}; }
  FaceGeometry face() { return unit_normal(ang(rng)); }
};

}  // namespace

TEST_CASE("face geometry") {
  FaceGeometry g = face_geometry({0, 0}, {0, 1});
  CHECK(g.nx == doctest::Approx(1.0));
  CHECK(g.ny == doctest::Approx(0.0));
  CHECK(g.ds == doctest::Approx(1.0));
  g = face_geometry({0, 0}, {1, 0});
  CHECK(g.nx == doctest::Approx(0.0));
  CHECK(g.ny == doctest::Approx(-1.0));
  g = face_geometry({0, 0}, {1, 1});
  CHECK(g.nx == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(g.ny == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(g.ds == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(face_geometry({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("split flux at rest and its 1D reduction") {
  const FaceGeometry g = unit_normal(0.7);
  const SplitFlux2D rest = split_flux_2d({1.2, 0.0, 0.0, 2.0}, g, kGas);
  CHECK(rest.convection.cwiseAbs().maxCoeff() == 0.0);
  CHECK(rest.pressure[1] == doctest::Approx(2.0 * g.nx));
  CHECK(rest.pressure[2] == doctest::Approx(2.0 * g.ny));
  CHECK(rest.pressure[3] == 0.0);

  const Prim2D w{0.8, 1.3, 0.0, 0.6};
  const SplitFlux2D s = split_flux_2d(w, {1.0, 0.0, 1.0}, kGas);
  const SplitFlux s1 = split_flux(SplittingKind::ZhaBilgen, {w.rho, w.u, w.p}, kGas);
  for (int a : {0, 1, 2}) {
    const int b = a == 2 ? 3 : a;
    CHECK(s.convection[b] == doctest::Approx(s1.convection[a]));
    CHECK(s.pressure[b] == doctest::Approx(s1.pressure[a]));
  }
  CHECK(s.convection[2] == 0.0);
  const Prim2D wv{0.8, 1.3, 0.4, 0.6};
  CHECK(split_flux_2d(wv, {1.0, 0.0, 1.0}, kGas).convection[2] == doctest::Approx(wv.rho * wv.v * wv.u));
}

TEST_CASE("split parts sum to the normal flux") {
  Gen2D gen;
  for (int n = 0; n < 100; ++n) {
    const Prim2D w = gen.state();
    const FaceGeometry g = gen.face();
    const Vec4 f = normal_flux(w, g, kGas);
    CHECK((split_flux_2d(w, g, kGas).total() - f).cwiseAbs().maxCoeff() < 1e-13 * std::max(1.0, f.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("convection eigenstructure") {
  Gen2D gen;
  for (int n = 0; n < 50; ++n) {
    const Prim2D w = gen.state();
    const FaceGeometry g = gen.face();
    const Mat4 a = convection_jacobian_2d(w, g, kGas);
    const double un = w.u * g.nx + w.v * g.ny;
    const Vec4 x1(1.0, w.u, w.v, total_energy(w, kGas));
    CHECK((a * x1 - un * x1).cwiseAbs().maxCoeff() < 1e-12 * a.cwiseAbs().maxCoeff());
    CHECK(jordan_block_signature(a, un) == std::vector<int>{2, 1, 1});
    const EigenSystem sys = convection_eigensystem_2d(w, g, kGas);
    CHECK(chain_residual(a, sys) < 1e-12 * a.cwiseAbs().maxCoeff());
    CHECK(verify_jordan(a, jordan_decomposition(sys)) < 1e-10 * std::max(1.0, a.cwiseAbs().maxCoeff()));
    const auto r = convection_eigenvectors_2d(w, g);
    for (int c = 0; c < 3; ++c)
      CHECK((a * r.col(c) - un * r.col(c)).cwiseAbs().maxCoeff() < 1e-12 * a.cwiseAbs().maxCoeff());
  }
  const FaceGeometry g = unit_normal(1.1);
  const FreeParams p = default_chain_params(g);
  CHECK(p.x1 == 0.0);
  CHECK(p.x2 * g.nx + p.x3 * g.ny == doctest::Approx(1.0));
  FreeParams bad = p;
  bad.x2 += 1.0;
  CHECK_THROWS_AS(convection_eigensystem_2d({1.0, 0.5, 0.2, 1.0}, g, kGas, bad), std::invalid_argument);
}

TEST_CASE("pressure eigenvectors") {
  Gen2D gen;
  for (int n = 0; n < 50; ++n) {
    const Prim2D w = gen.state();
    const FaceGeometry g = gen.face();
    const Mat4 a = pressure_jacobian_2d(w, g, kGas);
    const EigenSystem sys = pressure_eigensystem_2d(w, g, kGas);
    for (int c = 0; c < 4; ++c) {
      const Vec4 r = a * sys.vectors.col(c) - sys.eigenvalues[c] * sys.vectors.col(c);
      CHECK(r.cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()));
    }
  }
  // With n = (1, 0) and v = 0 the acoustic vectors are the 1D ones plus a zero v-row.
  const Prim2D w{1.1, 0.6, 0.0, 0.9};
  const EigenSystem two = pressure_eigensystem_2d(w, {1.0, 0.0, 1.0}, kGas);
  const EigenSystem one = pressure_eigensystem(SplittingKind::ZhaBilgen, {w.rho, w.u, w.p}, kGas);
  for (auto [c2, c1] : {std::pair{0, 0}, std::pair{3, 2}}) {
    CHECK(two.eigenvalues[c2] == doctest::Approx(one.eigenvalues[c1]));
    const double s = one.vectors(1, c1) / two.vectors(1, c2);
    CHECK(two.vectors(0, c2) * s == doctest::Approx(one.vectors(0, c1)));
    CHECK(two.vectors(2, c2) == 0.0);
    CHECK(two.vectors(3, c2) * s == doctest::Approx(one.vectors(2, c1)));
  }
  const EigenSystem rest = pressure_eigensystem_2d({1.0, 0.0, 0.0, 1.0}, unit_normal(0.3), kGas);
  CHECK(rest.vectors.col(1).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("wave strengths solve the 4x4 system") {
  Gen2D gen;
  int solved = 0;
  for (int n = 0; n < 300; ++n) {
    const Prim2D l = gen.state(), r = gen.state();
    const FaceGeometry g = gen.face();
    const Averages2D avg = interface_averages_2d(l, r, g, kGas);
    const WaveStrengths2D ws = wave_strengths_2d(avg, jumps_2d(l, r, g), kGas);
    if (ws.regularized || ws.conditioning < 1e-3) continue;
    const Mat4 rm = pressure_eigensystem_2d(avg.state(kGas), g, kGas).vectors;
    const Cons2D du = prim_to_cons(r, kGas) - prim_to_cons(l, kGas);
    const Vec4 oracle = rm.fullPivLu().solve(du);
    const double scale = std::max(1.0, oracle.cwiseAbs().maxCoeff());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ws.alpha[i] - oracle[i]) < 1e-9 * scale);
    CHECK((averaged_jump_2d(avg, jumps_2d(l, r, g), kGas) - du).cwiseAbs().maxCoeff() < 1e-13 * std::max(1.0, du.cwiseAbs().maxCoeff() + prim_to_cons(l, kGas).cwiseAbs().maxCoeff()));
    ++solved;
  }
  CHECK(solved > 200);
}

TEST_CASE("wave strength special cases") {
  const FaceGeometry g{1.0, 0.0, 1.0};
  const Prim2D w{1.0, 0.5, 0.0, 1.0};
  const Averages2D avg = interface_averages_2d(w, w, g, kGas);
  const WaveStrengths2D zero = wave_strengths_2d(avg, Deltas2D{}, kGas);
  for (double a : zero.alpha) CHECK(a == 0.0);
  // Pure normal jump without tangential motion.
  const Prim2D l{1.0, 0.5, 0.0, 1.0}, r{1.7, 0.2, 0.0, 1.3};
  const Averages2D a2 = interface_averages_2d(l, r, g, kGas);
  const Deltas2D d = jumps_2d(l, r, g);
  const WaveStrengths2D ws = wave_strengths_2d(a2, d, kGas);
  CHECK(ws.alpha[1] == 0.0);
  CHECK(ws.alpha[2] == doctest::Approx(d.rho));
  // Theta^2 = un^2 with nonzero tangential data triggers the fallback.
  const Prim2D m{1.0, 1.0, 1.0, 1.0};
  const Averages2D am = interface_averages_2d(m, m, g, kGas);
  const WaveStrengths2D reg = wave_strengths_2d(am, Deltas2D{0.1, 0.0, 0.2, 0.0, 0.0, 0.2}, kGas);
  CHECK(reg.regularized);
  CHECK(reg.alpha[1] == 0.0);
  CHECK(reg.alpha[2] == doctest::Approx(0.1));
}

TEST_CASE("face flux consistency and 1D reduction") {
  Gen2D gen;
  for (int n = 0; n < 100; ++n) {
    const Prim2D w = gen.state();
    const FaceGeometry g = gen.face();
    const Vec4 f = normal_flux(w, g, kGas);
    CHECK((interface_flux_2d(w, w, g, kGas) - f).cwiseAbs().maxCoeff() <= 1e-14 * std::max(1.0, f.cwiseAbs().maxCoeff()));
  }
  const Prim2D l{1.0, 0.3, 0.0, 1.0}, r{0.4, -0.2, 0.0, 0.3};
  const Vec4 f2 = interface_flux_2d(l, r, {1.0, 0.0, 1.0}, kGas);
  const Flux f1 = interface_flux(SchemeKind::ZbsFds, {l.rho, l.u, l.p}, {r.rho, r.u, r.p}, kGas);
  CHECK(f2[0] == doctest::Approx(f1[0]).epsilon(1e-13));
  CHECK(f2[1] == doctest::Approx(f1[1]).epsilon(1e-13));
  CHECK(std::abs(f2[2]) < 1e-14);
  CHECK(f2[3] == doctest::Approx(f1[2]).epsilon(1e-13));
}

TEST_CASE("contact at rest across the face has no dissipation") {
  const FaceGeometry g = unit_normal(0.4);
  // Tangential velocity only, equal pressure.
  const Prim2D l{1.0, -0.3 * g.ny, 0.3 * g.nx, 1.0}, r{2.5, -0.3 * g.ny, 0.3 * g.nx, 1.0};
  const Dissipation2D d = zbs_dissipation_2d(l, r, g, kGas);
  const Vec4 t = d.total();
  CHECK(std::abs(t[0]) < 1e-14);
  CHECK(std::abs(t[1] * g.nx + t[2] * g.ny) < 1e-14);
  CHECK(std::abs(t[3]) < 1e-14);
}
