#include "cpsplit/solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cpsplit {

namespace {

std::string blow_up_message(long step, long cell, double time, const std::string& detail) {
  std::ostringstream os;
  os.precision(17);
  os << "solver blew up at step " << step << ", cell " << cell << ", t=" << time << ": " << detail;
  return os.str();
}

class Stepper {
 public:
  Stepper(const Grid1D& grid, const Solver1DConfig& cfg, const GasModel& gas)
      : n_(grid.n_cells),
        ng_(cfg.recon.order == 1 ? 1 : 2),
        dx_(grid.dx()),
        eps2_(std::pow(cfg.recon.limiter_k * grid.dx(), 3)),
        cfg_(cfg),
        gas_(gas),
        w_(n_ + 2 * ng_),
        slope_(n_ + 2 * ng_, Vec3::Zero()),
        flux_(n_ + 1) {}

  void set_context(long step, double time) {
    step_ = step;
    time_ = time;
  }

  [[noreturn]] void fail(long cell, const std::string& what) const {
    throw SolverBlowUp(step_, cell, time_, what);
  }

  std::vector<Primitive> primitives(const std::vector<Conserved>& q) const {
    std::vector<Primitive> w(n_);
    for (int i = 0; i < n_; ++i) {
      try {
        w[i] = cons_to_prim(q[i], gas_, i);
      } catch (const NonPhysicalState& e) {
        fail(i, e.what());
      }
    }
    return w;
  }

  // Semi-discrete right-hand side -(F_{i+1/2} - F_{i-1/2}) / dx.
  std::vector<Conserved> rhs(const std::vector<Conserved>& q) {
    const std::vector<Primitive> interior = primitives(q);
    for (int i = 0; i < n_; ++i) w_[ng_ + i] = interior[i];
    fill_ghosts();

    if (cfg_.recon.order == 2) {
      for (int c = 1; c < n_ + 2 * ng_ - 1; ++c) {
        const Vec3 a(w_[c - 1].rho, w_[c - 1].u, w_[c - 1].p);
        const Vec3 b(w_[c].rho, w_[c].u, w_[c].p);
        const Vec3 d(w_[c + 1].rho, w_[c + 1].u, w_[c + 1].p);
        for (int k = 0; k < 3; ++k) slope_[c][k] = limited_slope(b[k] - a[k], d[k] - b[k], eps2_);
      }
    }

    for (int f = 0; f <= n_; ++f) {
      const int cl = ng_ - 1 + f, cr = ng_ + f;
      Primitive wl = w_[cl], wr = w_[cr];
      if (cfg_.recon.order == 2) {
        wl = {wl.rho + 0.5 * slope_[cl][0], wl.u + 0.5 * slope_[cl][1], wl.p + 0.5 * slope_[cl][2]};
        wr = {wr.rho - 0.5 * slope_[cr][0], wr.u - 0.5 * slope_[cr][1], wr.p - 0.5 * slope_[cr][2]};
        if (!is_physical(wl)) fail(std::clamp(cl - ng_, 0, n_ - 1), "non-physical reconstructed state");
        if (!is_physical(wr)) fail(std::clamp(cr - ng_, 0, n_ - 1), "non-physical reconstructed state");
      }
      flux_[f] = interface_flux(cfg_.scheme, wl, wr, gas_);
    }

    std::vector<Conserved> dq(n_);
    for (int i = 0; i < n_; ++i) {
      dq[i] = -(flux_[i + 1] - flux_[i]) / dx_;
      if (!dq[i].allFinite()) fail(i, "non-finite flux");
    }
    return dq;
  }

 private:
  void fill_ghosts() {
    for (int k = 0; k < ng_; ++k) {
      // Ghost k cells outside the boundary, counting from 0.
      const int gl = ng_ - 1 - k, gr = ng_ + n_ + k;
      switch (cfg_.bc.left) {
        case Boundary::Transmissive: w_[gl] = w_[ng_]; break;
        case Boundary::Reflective: {
          const Primitive& m = w_[ng_ + k];
          w_[gl] = {m.rho, -m.u, m.p};
          break;
        }
        case Boundary::Periodic: w_[gl] = w_[ng_ + n_ - 1 - k]; break;
      }
      switch (cfg_.bc.right) {
        case Boundary::Transmissive: w_[gr] = w_[ng_ + n_ - 1]; break;
        case Boundary::Reflective: {
          const Primitive& m = w_[ng_ + n_ - 1 - k];
          w_[gr] = {m.rho, -m.u, m.p};
          break;
        }
        case Boundary::Periodic: w_[gr] = w_[ng_ + k]; break;
      }
    }
  }

  int n_;
  int ng_;
  double dx_;
  double eps2_;
  const Solver1DConfig& cfg_;
  const GasModel& gas_;
  std::vector<Primitive> w_;
  std::vector<Vec3> slope_;
  std::vector<Flux> flux_;
  long step_ = 0;
  double time_ = 0.0;
};

}  // namespace

Grid1D::Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), n_cells(n) {
  if (n < 4) throw std::invalid_argument("a 1D grid needs at least 4 cells");
  if (!(hi > lo)) throw std::invalid_argument("grid bounds must satisfy x_max > x_min");
}

SolverBlowUp::SolverBlowUp(long step, long cell, double time, const std::string& detail)
    : std::runtime_error(blow_up_message(step, cell, time, detail)),
      step_(step),
      cell_(cell),
      time_(time) {}

double compute_dt(const std::vector<Primitive>& w, const GasModel& gas, double dx, double cfl) {
  double smax = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    require_physical(w[i], static_cast<long>(i));
    smax = std::max(smax, std::abs(w[i].u) + sound_speed(w[i], gas));
  }
  return cfl * dx / smax;
}

double limited_slope(double d_minus, double d_plus, double eps2) {
  const double num = (d_plus * d_plus + eps2) * d_minus + (d_minus * d_minus + eps2) * d_plus;
  const double den = d_plus * d_plus + d_minus * d_minus + 2.0 * eps2;
  return den > 0.0 ? num / den : 0.0;
}

FaceValues muscl_reconstruct(const std::vector<double>& v, double dx, double k) {
  const double eps2 = std::pow(k * dx, 3);
  FaceValues out{v, v};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double s = limited_slope(v[i] - v[i - 1], v[i + 1] - v[i], eps2);
    out.minus[i] = v[i] - 0.5 * s;
    out.plus[i] = v[i] + 0.5 * s;
  }
  return out;
}

Result1D advance(const Grid1D& grid, std::vector<Primitive> initial, const Solver1DConfig& cfg,
                 const GasModel& gas) {
  if (static_cast<int>(initial.size()) != grid.n_cells)
    throw std::invalid_argument("initial state size does not match the grid");
  if (!(cfg.time.cfl > 0.0 && cfg.time.cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
  if (!(cfg.time.t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (cfg.recon.order != 1 && cfg.recon.order != 2) throw std::invalid_argument("order must be 1 or 2");
  if (cfg.recon.order == 2 && !(cfg.recon.limiter_k > 0.0))
    throw std::invalid_argument("limiter constant K must be positive");
  if ((cfg.bc.left == Boundary::Periodic) != (cfg.bc.right == Boundary::Periodic))
    throw std::invalid_argument("periodic boundaries must be set on both ends");

  std::vector<double> marks = cfg.snapshot_times;
  std::sort(marks.begin(), marks.end());
  marks.erase(std::remove_if(marks.begin(), marks.end(),
                             [&](double t) { return !(t > 0.0 && t < cfg.time.t_final); }),
              marks.end());
  marks.push_back(cfg.time.t_final);

  const int n = grid.n_cells;
  std::vector<Conserved> q(n);
  for (int i = 0; i < n; ++i) {
    require_physical(initial[i], i);
    q[i] = prim_to_cons(initial[i], gas);
  }

  Stepper stepper(grid, cfg, gas);
  Result1D res;
  res.grid = grid;
  res.dt_min = std::numeric_limits<double>::infinity();
  double t = 0.0;
  std::size_t next_mark = 0;
  long step = 0;

  while (next_mark < marks.size()) {
    if (step >= cfg.time.max_steps) break;
    stepper.set_context(step + 1, t);
    const std::vector<Primitive> w = stepper.primitives(q);
    double dt = cfg.time.fixed_dt > 0.0 ? cfg.time.fixed_dt
                                         : compute_dt(w, gas, grid.dx(), cfg.time.cfl);
    if (!(dt > 0.0) || !std::isfinite(dt)) stepper.fail(-1, "invalid time step");
    const double target = marks[next_mark];
    bool hit = false;
    if (t + dt >= target) {
      dt = target - t;
      hit = true;
    }

    const std::vector<Conserved> k1 = stepper.rhs(q);
    std::vector<Conserved> q1(n);
    for (int i = 0; i < n; ++i) q1[i] = q[i] + dt * k1[i];
    if (cfg.recon.order == 2) {
      const std::vector<Conserved> k2 = stepper.rhs(q1);
      for (int i = 0; i < n; ++i) q1[i] = 0.5 * q[i] + 0.5 * (q1[i] + dt * k2[i]);
    }
    q.swap(q1);
    ++step;
    t = hit ? target : t + dt;
    res.dt_min = std::min(res.dt_min, dt);
    res.dt_max = std::max(res.dt_max, dt);

    if (hit) {
      stepper.set_context(step, t);
      if (next_mark + 1 < marks.size()) res.snapshots.push_back({t, stepper.primitives(q)});
      ++next_mark;
    }
  }

  stepper.set_context(step, t);
  res.w = stepper.primitives(q);
  res.time = t;
  res.steps = step;
  res.completed = next_mark == marks.size();
  return res;
}

}  // namespace cpsplit
