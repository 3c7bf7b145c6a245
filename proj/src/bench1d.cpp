#include "cpsplit/bench1d.hpp"

#include "cpsplit/exact_riemann.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace cpsplit {

namespace {

CaseSpec riemann_case(std::string name, std::string summary, double lo, double hi, double x0,
                      Primitive wl, Primitive wr, double t_final) {
  CaseSpec c;
  c.name = std::move(name);
  c.summary = std::move(summary);
  c.x_min = lo;
  c.x_max = hi;
  c.x0 = x0;
  c.left = wl;
  c.right = wr;
  c.initial = [wl, wr, x0](double x) { return x < x0 ? wl : wr; };
  c.t_final = t_final;
  return c;
}

double pick(const Primitive& w, Variable var) {
  switch (var) {
    case Variable::Density: return w.rho;
    case Variable::Velocity: return w.u;
    case Variable::Pressure: return w.p;
  }
  return w.rho;
}

}  // namespace

std::string_view to_string(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::ExactRiemann: return "exact-riemann";
    case ReferenceKind::TranslatedSmooth: return "translated-smooth";
    case ReferenceKind::None: return "none";
  }
  return "unknown";
}

std::vector<CaseSpec> case_registry() {
  const GasModel gas(1.4);
  std::vector<CaseSpec> cases;

  {
    CaseSpec c;
    c.name = "smooth";
    c.summary = "periodic density wave rho=1+0.2sin(pi x), u=0.1, p=0.5";
    c.x_min = 0.0;
    c.x_max = 2.0;
    c.x0 = 0.0;
    c.initial = [](double x) {
      return Primitive{1.0 + 0.2 * std::sin(std::numbers::pi * x), 0.1, 0.5};
    };
    c.bc = {Boundary::Periodic, Boundary::Periodic};
    c.t_final = 0.5;
    c.reference = ReferenceKind::TranslatedSmooth;
    cases.push_back(c);
  }

  cases.push_back(riemann_case("sod", "dimensional Sod shock tube", -10.0, 10.0, 0.0,
                               {1.0, 0.0, 1e5}, {0.125, 0.0, 1e4}, 0.01));
  cases.push_back(riemann_case("lax", "Lax shock tube", 0.0, 1.0, 0.5, {0.445, 0.698, 3.528},
                               {0.5, 0.0, 0.571}, 0.15));
  cases.push_back(riemann_case("sonic-point", "left sonic rarefaction, right shock", 0.0, 1.0, 0.3,
                               {1.0, 0.75, 1.0}, {0.125, 0.0, 0.1}, 0.2));
  cases.push_back(riemann_case("strong-shock", "pressure ratio 1e5 shock tube", 0.0, 1.0, 0.5,
                               {1.0, 0.0, 1000.0}, {1.0, 0.0, 0.01}, 0.012));
  cases.push_back(riemann_case("stationary-contact", "contact at rest", 0.0, 1.0, 0.5,
                               {1.4, 0.0, 1.0}, {1.0, 0.0, 1.0}, 2.0));
  cases.push_back(riemann_case("slow-contact", "strong shock with slowly moving contact", 0.0, 1.0,
                               0.8, {1.0, -19.59745, 1000.0}, {1.0, -19.59745, 0.01}, 0.012));
  cases.push_back(riemann_case("slow-shock", "slowly moving shock", 0.0, 1.0, 0.1,
                               cons_to_prim({3.86, -3.1266, 27.0913}, gas),
                               cons_to_prim({1.0, -3.44, 8.4168}, gas), 4.0));
  cases.push_back(riemann_case("mach3", "supersonic expansion, Mach 3", 0.0, 1.0, 0.4,
                               {3.857, 0.92, 10.333}, {1.0, 3.55, 1.0}, 0.1));

  {
    CaseSpec c;
    c.name = "blast";
    c.summary = "interacting blast waves between reflective walls";
    c.x_min = 0.0;
    c.x_max = 1.0;
    c.x0 = 0.1;
    c.initial = [](double x) {
      const double p = x < 0.1 ? 1000.0 : (x < 0.9 ? 0.01 : 100.0);
      return Primitive{1.0, 0.0, p};
    };
    c.bc = {Boundary::Reflective, Boundary::Reflective};
    c.t_final = 0.038;
    c.snapshot_times = {0.026};
    c.default_cells = 3000;
    c.default_cfl = 0.5;
    c.reference = ReferenceKind::None;
    cases.push_back(c);
  }

  {
    CaseSpec c;
    c.name = "shock-entropy";
    c.summary = "Mach 3 shock running into a density sine wave";
    c.x_min = -1.0;
    c.x_max = 1.0;
    c.x0 = -0.8;
    c.left = {3.857143, 2.629369, 10.3333};
    c.initial = [wl = c.left](double x) {
      if (x < -0.8) return wl;
      return Primitive{1.0 + 0.2 * std::sin(5.0 * std::numbers::pi * x), 0.0, 1.0};
    };
    c.t_final = 0.47;
    c.default_cells = 800;
    c.reference = ReferenceKind::None;
    cases.push_back(c);
  }
  return cases;
}

CaseSpec find_case(const std::string& name) {
  for (auto& c : case_registry())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown 1D case '" + name + "'");
}

ErrorReport error_norms(const Grid1D& grid, const std::vector<Primitive>& numerical,
                        const std::function<Primitive(double)>& reference, Variable var) {
  if (static_cast<int>(numerical.size()) != grid.n_cells)
    throw std::invalid_argument("solution size does not match the grid");
  ErrorReport r;
  double sum1 = 0.0, sum2 = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    const double e = std::abs(pick(numerical[i], var) - pick(reference(grid.center(i)), var));
    sum1 += e;
    sum2 += e * e;
    r.linf = std::max(r.linf, e);
  }
  r.l1 = sum1 * grid.dx();
  r.l2 = std::sqrt(sum2 * grid.dx());
  return r;
}

std::function<Primitive(double)> reference_solution(const CaseSpec& spec, double t,
                                                    const GasModel& gas) {
  switch (spec.reference) {
    case ReferenceKind::ExactRiemann: {
      auto exact = std::make_shared<ExactRiemann>(spec.left, spec.right, gas, spec.x0);
      return [exact, t](double x) { return exact->at(x, t); };
    }
    case ReferenceKind::TranslatedSmooth: {
      // Constant velocity and pressure: the profile is carried unchanged.
      const double shift = spec.initial(spec.x_min).u * t;
      const double len = spec.x_max - spec.x_min;
      return [spec, shift, len](double x) {
        double xs = x - shift - spec.x_min;
        xs -= len * std::floor(xs / len);
        return spec.initial(spec.x_min + xs);
      };
    }
    case ReferenceKind::None: break;
  }
  throw std::invalid_argument("case '" + spec.name + "' has no reference solution");
}

double eoc(double e1, double h1, double e2, double h2) {
  if (!(e1 > 0.0) || !(e2 > 0.0)) throw std::invalid_argument("EOC needs positive errors");
  if (h1 == h2) throw std::invalid_argument("EOC needs distinct spacings");
  return (std::log(e1) - std::log(e2)) / (std::log(h1) - std::log(h2));
}

Grid1D case_grid(const CaseSpec& spec, int cells) { return Grid1D(spec.x_min, spec.x_max, cells); }

std::vector<Primitive> initial_cells(const CaseSpec& spec, const Grid1D& grid) {
  std::vector<Primitive> w(grid.n_cells);
  for (int i = 0; i < grid.n_cells; ++i) w[i] = spec.initial(grid.center(i));
  return w;
}

Result1D run_case(const CaseSpec& spec, const RunOptions& opts, const GasModel& gas) {
  const Grid1D grid = case_grid(spec, opts.cells.value_or(spec.default_cells));
  Solver1DConfig cfg;
  cfg.scheme = opts.scheme;
  cfg.recon = {opts.order, opts.limiter_k};
  cfg.bc = spec.bc;
  cfg.time.cfl = opts.cfl.value_or(spec.default_cfl);
  cfg.time.t_final = opts.t_final.value_or(spec.t_final);
  cfg.snapshot_times = spec.snapshot_times;
  return advance(grid, initial_cells(spec, grid), cfg, gas);
}

std::vector<ConvergenceRow> convergence_study(const CaseSpec& spec, RunOptions opts,
                                              const std::vector<int>& cells, const GasModel& gas) {
  std::vector<ConvergenceRow> rows;
  for (int n : cells) {
    opts.cells = n;
    const Result1D res = run_case(spec, opts, gas);
    ConvergenceRow row;
    row.cells = n;
    row.h = res.grid.dx();
    row.err = error_norms(res.grid, res.w, reference_solution(spec, res.time, gas));
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      row.order = ErrorReport{eoc(prev.err.l1, prev.h, row.err.l1, row.h),
                              eoc(prev.err.l2, prev.h, row.err.l2, row.h),
                              eoc(prev.err.linf, prev.h, row.err.linf, row.h)};
    }
    rows.push_back(row);
  }
  return rows;
}

SteadyShock steady_shock(double mach, const GasModel& gas) {
  if (!(mach > 1.0)) throw std::invalid_argument("steady shock needs M > 1");
  const double g = gas.gamma(), m2 = mach * mach;
  SteadyShock s;
  s.mach = mach;
  s.left = {1.0, 1.0, 1.0 / (g * m2)};
  const double pr = s.left.p * (2.0 * g * m2 - (g - 1.0)) / (g + 1.0);
  const double ratio = pr / s.left.p;
  const double k = (g + 1.0) / (g - 1.0);
  const double rr = s.left.rho * (k * ratio + 1.0) / (k + ratio);
  const double ur = std::sqrt(g * (2.0 + (g - 1.0) * m2) * pr / ((2.0 * g * m2 + 1.0 - g) * rr));
  s.right = {rr, ur, pr};
  return s;
}

std::vector<Error3Row> error3_sweep(const std::vector<double>& machs, const GasModel& gas) {
  std::vector<Error3Row> rows;
  for (double m : machs) {
    const SteadyShock s = steady_shock(m, gas);
    Error3Row r;
    r.mach = m;
    r.error3 = error3(s.left, s.right, gas);
    r.scale = std::max(std::abs(prim_to_cons(s.left, gas)[2]), std::abs(prim_to_cons(s.right, gas)[2]));
    r.density_ratio = s.right.rho / s.left.rho;
    rows.push_back(r);
  }
  return rows;
}

FanCheck rarefaction_monotonicity(const CaseSpec& spec, const Result1D& res, const GasModel& gas,
                                  double factor) {
  const StarState star = solve_star(spec.left, spec.right, gas);
  if (!(star.p_star < spec.left.p))
    throw std::invalid_argument("case '" + spec.name + "' has no left rarefaction");
  const double al = sound_speed(spec.left, gas);
  const double z = gas.gm1() / (2.0 * gas.gamma());
  const double a_star = al * std::pow(star.p_star / spec.left.p, z);
  const double head = spec.x0 + (spec.left.u - al) * res.time;
  const double tail = spec.x0 + (star.u_star - a_star) * res.time;

  std::vector<int> fan;
  for (int i = 0; i < res.grid.n_cells; ++i) {
    const double x = res.grid.center(i);
    if (x >= head && x <= tail) fan.push_back(i);
  }
  FanCheck out;
  for (std::size_t k = 1; k + 2 < fan.size(); ++k) {
    const int i = fan[k];
    const double jump = std::abs(res.w[i + 1].rho - res.w[i].rho);
    const double before = std::abs(res.w[i].rho - res.w[i - 1].rho);
    const double after = std::abs(res.w[i + 2].rho - res.w[i + 1].rho);
    const double mean = 0.5 * (before + after);
    const double ratio = mean > 0.0 ? jump / mean : (jump > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    out.worst_ratio = std::max(out.worst_ratio, ratio);
    ++out.cells_checked;
  }
  out.pass = out.cells_checked > 0 && out.worst_ratio <= factor;
  return out;
}

}  // namespace cpsplit
