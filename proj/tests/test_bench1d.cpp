#include "cpsplit/bench1d.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace cpsplit;

namespace {

const GasModel kGas(1.4);

}  // namespace

TEST_CASE("case registry") {
  const auto cases = case_registry();
  std::set<std::string> names;
  for (const CaseSpec& c : cases) {
    CHECK(names.insert(c.name).second);
    CHECK(c.t_final > 0.0);
    CHECK(c.x_max > c.x_min);
    CHECK(static_cast<bool>(c.initial));
    CHECK(is_physical(c.initial(0.5 * (c.x_min + c.x_max))));
  }
  for (const char* n : {"smooth", "sod", "sonic-point", "strong-shock", "stationary-contact", "blast",
                        "shock-entropy"})
    CHECK(names.count(n) == 1);
  CHECK_THROWS_AS(find_case("nope"), std::invalid_argument);
  CHECK_THROWS_AS(reference_solution(find_case("blast"), 0.01, kGas), std::invalid_argument);
}

TEST_CASE("error norms of a constant offset") {
  const Grid1D g(0.0, 2.0, 20);
  const std::vector<Primitive> w(20, Primitive{1.5, 0.0, 1.0});
  const ErrorReport e = error_norms(g, w, [](double) { return Primitive{1.0, 0.0, 1.0}; });
  CHECK(e.l1 == doctest::Approx(1.0));
  CHECK(e.l2 == doctest::Approx(std::sqrt(0.5)));
  CHECK(e.linf == doctest::Approx(0.5));
  const ErrorReport p = error_norms(g, w, [](double) { return Primitive{1.5, 0.0, 3.0}; }, Variable::Pressure);
  CHECK(p.l1 == doctest::Approx(4.0));
}

TEST_CASE("experimental order of convergence") {
  CHECK(eoc(4e-2, 0.1, 1e-2, 0.05) == doctest::Approx(2.0));
  CHECK(eoc(1.0, 1.0, 0.5, 0.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS(eoc(0.0, 0.1, 1.0, 0.05), std::invalid_argument);
  CHECK_THROWS_AS(eoc(1.0, 0.1, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("translated smooth reference is periodic") {
  const CaseSpec c = find_case("smooth");
  const auto ref = reference_solution(c, 20.0, kGas);
  // u = 0.1 and period 2: t = 20 is one full period.
  for (double x : {0.1, 0.7, 1.9}) CHECK(ref(x).rho == doctest::Approx(c.initial(x).rho));
}

TEST_CASE("steady shock satisfies the Rankine-Hugoniot conditions") {
  for (double m : {1.5, 3.0, 10.0, 100.0}) {
    const SteadyShock s = steady_shock(m, kGas);
    const Flux fl = physical_flux(s.left, kGas), fr = physical_flux(s.right, kGas);
    for (int k = 0; k < 3; ++k) CHECK(fr[k] == doctest::Approx(fl[k]).epsilon(1e-12));
    CHECK(s.left.u / sound_speed(s.left, kGas) == doctest::Approx(m));
  }
  CHECK_THROWS_AS(steady_shock(1.0, kGas), std::invalid_argument);
}

TEST_CASE("error3 vanishes across steady shocks") {
  const auto rows = error3_sweep({2.0, 10.0, 100.0, 1000.0}, kGas);
  for (const Error3Row& r : rows) CHECK(std::abs(r.error3) <= 1e-12 * r.scale);
  CHECK(rows.back().density_ratio == doctest::Approx(6.0).epsilon(1e-2));
}

TEST_CASE("first order converges on the smooth wave") {
  RunOptions opts;
  const auto rows = convergence_study(find_case("smooth"), opts, {40, 80, 160}, kGas);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].order.has_value());
  CHECK(rows[2].err.l1 < rows[1].err.l1);
  CHECK(rows[2].order->l1 > 0.8);
}

TEST_CASE("Sod errors fall with refinement and the fan stays smooth") {
  RunOptions opts;
  const CaseSpec sod = find_case("sod");
  const auto rows = convergence_study(sod, opts, {50, 100}, kGas);
  CHECK(rows[1].err.l1 < rows[0].err.l1);

  const CaseSpec sonic = find_case("sonic-point");
  opts.cells = 200;
  for (SchemeKind s : {SchemeKind::ZbsFds, SchemeKind::TvsFds}) {
    opts.scheme = s;
    const Result1D r = run_case(sonic, opts, kGas);
    const FanCheck f = rarefaction_monotonicity(sonic, r, kGas);
    CHECK(f.cells_checked > 5);
    CHECK(f.pass);
  }
  CHECK_THROWS_AS(rarefaction_monotonicity(find_case("stationary-contact"), run_case(sonic, opts, kGas), kGas),
                  std::invalid_argument);
}

TEST_CASE("run options override case defaults") {
  RunOptions opts;
  opts.cells = 30;
  opts.t_final = 0.001;
  const Result1D r = run_case(find_case("sod"), opts, kGas);
  CHECK(r.grid.n_cells == 30);
  CHECK(r.time == doctest::Approx(0.001));
  CHECK(initial_cells(find_case("sod"), r.grid).size() == 30);
}
