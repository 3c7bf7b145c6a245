#include "cpsplit/solver2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cpsplit {

namespace {

constexpr int kGhost = 2;

double polygon_area(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  // Shoelace via the diagonals; exact for any simple quadrilateral.
  return 0.5 * ((c.x - a.x) * (d.y - b.y) - (d.x - b.x) * (c.y - a.y));
}

class Stepper2D {
 public:
  Stepper2D(const StructuredGrid2D& grid, const Boundaries2D& bc, const Solver2DConfig& cfg,
            const GasModel& gas)
      : grid_(grid),
        bc_(bc),
        cfg_(cfg),
        gas_(gas),
        ni_(grid.ni()),
        nj_(grid.nj()),
        stride_(grid.ni() + 2 * kGhost),
        w_(static_cast<std::size_t>(stride_) * (nj_ + 2 * kGhost)),
        si_(w_.size(), Vec4::Zero()),
        sj_(w_.size(), Vec4::Zero()),
        fi_(static_cast<std::size_t>(ni_ + 1) * nj_),
        fj_(static_cast<std::size_t>(ni_) * (nj_ + 1)) {}

  void set_context(long step, double time) {
    step_ = step;
    time_ = time;
  }

  [[noreturn]] void fail(long cell, const std::string& what) const {
    std::ostringstream os;
    os << what;
    if (cell >= 0) os << " (i=" << cell % ni_ << ", j=" << cell / ni_ << ")";
    throw SolverBlowUp(step_, cell, time_, os.str());
  }

  std::vector<Prim2D> primitives(const std::vector<Cons2D>& q) const {
    std::vector<Prim2D> w(q.size());
    for (std::size_t m = 0; m < q.size(); ++m) {
      try {
        w[m] = cons_to_prim2d(q[m], gas_, static_cast<long>(m));
      } catch (const NonPhysicalState& e) {
        fail(static_cast<long>(m), e.what());
      }
    }
    return w;
  }

  // Fills dq with -(1/A) sum_k F_k ds_k; returns the L2 norm of the density rate.
  double rhs(const std::vector<Cons2D>& q, std::vector<Cons2D>& dq) {
    const std::vector<Prim2D> interior = primitives(q);
    for (int j = 0; j < nj_; ++j)
      for (int i = 0; i < ni_; ++i) at(i, j) = interior[grid_.cell_index(i, j)];
    fill_ghosts();
    if (cfg_.order == 2) compute_slopes();

    // At a slip wall the outer state is the mirror of the reconstructed inner
    // one. Mirroring cell values and limiting afterwards would not commute on
    // walls that are not aligned with x or y, and mass would leak.
    for (int j = 0; j < nj_; ++j) {
      for (int i = 0; i <= ni_; ++i) {
        Prim2D wl = at(i - 1, j), wr = at(i, j);
        if (cfg_.order == 2) {
          wl = shifted(wl, si_[pad(i - 1, j)], 0.5);
          wr = shifted(wr, si_[pad(i, j)], -0.5);
          check(wl, i - 1, j);
          check(wr, i, j);
          if (i == 0 && bc_.i_min.kind == Bc2DKind::SlipWall) wl = slip_wall_ghost(wr, grid_.iface(i, j));
          if (i == ni_ && bc_.i_max.kind == Bc2DKind::SlipWall) wr = slip_wall_ghost(wl, grid_.iface(i, j));
        }
        const FaceGeometry& g = grid_.iface(i, j);
        fi_[i + (ni_ + 1) * j] = interface_flux_2d(wl, wr, g, gas_) * g.ds;
      }
    }
    for (int j = 0; j <= nj_; ++j) {
      for (int i = 0; i < ni_; ++i) {
        Prim2D wl = at(i, j - 1), wr = at(i, j);
        if (cfg_.order == 2) {
          wl = shifted(wl, sj_[pad(i, j - 1)], 0.5);
          wr = shifted(wr, sj_[pad(i, j)], -0.5);
          check(wl, i, j - 1);
          check(wr, i, j);
          if (j == 0 && bc_.j_min.kind == Bc2DKind::SlipWall) wl = slip_wall_ghost(wr, grid_.jface(i, j));
          if (j == nj_ && bc_.j_max.kind == Bc2DKind::SlipWall) wr = slip_wall_ghost(wl, grid_.jface(i, j));
        }
        const FaceGeometry& g = grid_.jface(i, j);
        fj_[i + ni_ * j] = interface_flux_2d(wl, wr, g, gas_) * g.ds;
      }
    }

    double sum = 0.0;
    dq.resize(q.size());
    for (int j = 0; j < nj_; ++j) {
      for (int i = 0; i < ni_; ++i) {
        const int m = grid_.cell_index(i, j);
        const Vec4 net = fi_[i + 1 + (ni_ + 1) * j] - fi_[i + (ni_ + 1) * j] +
                         fj_[i + ni_ * (j + 1)] - fj_[i + ni_ * j];
        dq[m] = -net / grid_.area(i, j);
        if (!dq[m].allFinite()) fail(m, "non-finite flux");
        sum += dq[m][0] * dq[m][0];
      }
    }
    return std::sqrt(sum / static_cast<double>(q.size()));
  }

 private:
  int pad(int i, int j) const { return (i + kGhost) + stride_ * (j + kGhost); }
  Prim2D& at(int i, int j) { return w_[pad(i, j)]; }

  static Prim2D shifted(const Prim2D& w, const Vec4& s, double f) {
    return {w.rho + f * s[0], w.u + f * s[1], w.v + f * s[2], w.p + f * s[3]};
  }

  void check(const Prim2D& w, int i, int j) const {
    if (!is_physical(w))
      fail(grid_.cell_index(std::clamp(i, 0, ni_ - 1), std::clamp(j, 0, nj_ - 1)),
           "non-physical reconstructed state");
  }

  Prim2D ghost(const Bc2D& bc, const Prim2D& interior, const Prim2D& nearest,
               const FaceGeometry& face) const {
    switch (bc.kind) {
      case Bc2DKind::SupersonicInflow:
      case Bc2DKind::PostShockDirichlet: return bc.state;
      case Bc2DKind::SupersonicOutflow: return nearest;
      case Bc2DKind::SlipWall: return slip_wall_ghost(interior, face);
    }
    return nearest;
  }

  void fill_ghosts() {
    for (int k = 0; k < kGhost; ++k) {
      for (int j = 0; j < nj_; ++j) {
        at(-1 - k, j) = ghost(bc_.i_min, at(k, j), at(0, j), grid_.iface(0, j));
        at(ni_ + k, j) = ghost(bc_.i_max, at(ni_ - 1 - k, j), at(ni_ - 1, j), grid_.iface(ni_, j));
      }
      for (int i = 0; i < ni_; ++i) {
        at(i, -1 - k) = ghost(bc_.j_min, at(i, k), at(i, 0), grid_.jface(i, 0));
        at(i, nj_ + k) = ghost(bc_.j_max, at(i, nj_ - 1 - k), at(i, nj_ - 1), grid_.jface(i, nj_));
      }
    }
  }

  static Vec4 as_vec(const Prim2D& w) { return {w.rho, w.u, w.v, w.p}; }

  void compute_slopes() {
    for (int j = 0; j < nj_; ++j) {
      for (int i = -1; i <= ni_; ++i) {
        const double h = std::sqrt(grid_.area(std::clamp(i, 0, ni_ - 1), j));
        const double eps2 = std::pow(cfg_.limiter_k * h, 3);
        const Vec4 a = as_vec(at(i - 1, j)), b = as_vec(at(i, j)), c = as_vec(at(i + 1, j));
        Vec4& s = si_[pad(i, j)];
        for (int k = 0; k < 4; ++k) s[k] = limited_slope(b[k] - a[k], c[k] - b[k], eps2);
      }
    }
    for (int j = -1; j <= nj_; ++j) {
      for (int i = 0; i < ni_; ++i) {
        const double h = std::sqrt(grid_.area(i, std::clamp(j, 0, nj_ - 1)));
        const double eps2 = std::pow(cfg_.limiter_k * h, 3);
        const Vec4 a = as_vec(at(i, j - 1)), b = as_vec(at(i, j)), c = as_vec(at(i, j + 1));
        Vec4& s = sj_[pad(i, j)];
        for (int k = 0; k < 4; ++k) s[k] = limited_slope(b[k] - a[k], c[k] - b[k], eps2);
      }
    }
  }

  const StructuredGrid2D& grid_;
  const Boundaries2D& bc_;
  const Solver2DConfig& cfg_;
  const GasModel& gas_;
  int ni_;
  int nj_;
  int stride_;
  std::vector<Prim2D> w_;
  std::vector<Vec4> si_;
  std::vector<Vec4> sj_;
  std::vector<Vec4> fi_;
  std::vector<Vec4> fj_;
  long step_ = 0;
  double time_ = 0.0;
};

// Advances q in place by dt; returns the residual of the first stage.
double step_with(Stepper2D& s, std::vector<Cons2D>& q, int order, double dt) {
  std::vector<Cons2D> k1, k2;
  const double res = s.rhs(q, k1);
  std::vector<Cons2D> q1(q.size());
  for (std::size_t m = 0; m < q.size(); ++m) q1[m] = q[m] + dt * k1[m];
  if (order == 2) {
    s.rhs(q1, k2);
    for (std::size_t m = 0; m < q.size(); ++m) q1[m] = 0.5 * q[m] + 0.5 * (q1[m] + dt * k2[m]);
  }
  q.swap(q1);
  return res;
}

void validate(const Solver2DConfig& cfg) {
  if (cfg.order != 1 && cfg.order != 2) throw std::invalid_argument("order must be 1 or 2");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw std::invalid_argument("cfl must be in (0, 1]");
  if (!(cfg.t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (cfg.order == 2 && !(cfg.limiter_k > 0.0))
    throw std::invalid_argument("limiter constant K must be positive");
}

}  // namespace

StructuredGrid2D::StructuredGrid2D(int ni, int nj, std::vector<Point2> vertices)
    : ni_(ni), nj_(nj), vertices_(std::move(vertices)) {
  if (ni < 1 || nj < 1) throw std::invalid_argument("grid needs at least one cell per direction");
  if (vertices_.size() != static_cast<std::size_t>(ni + 1) * (nj + 1))
    throw std::invalid_argument("vertex count does not match (ni+1)(nj+1)");
  area_.resize(static_cast<std::size_t>(ni) * nj);
  for (int j = 0; j < nj; ++j) {
    for (int i = 0; i < ni; ++i) {
      const double a = polygon_area(vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1), vertex(i, j + 1));
      if (!(a > 0.0)) {
        std::ostringstream os;
        os << "cell (" << i << ", " << j << ") has non-positive area " << a;
        throw std::invalid_argument(os.str());
      }
      area_[cell_index(i, j)] = a;
    }
  }
  iface_.resize(static_cast<std::size_t>(ni + 1) * nj);
  for (int j = 0; j < nj; ++j)
    for (int i = 0; i <= ni; ++i) iface_[i + (ni + 1) * j] = face_geometry(vertex(i, j), vertex(i, j + 1));
  jface_.resize(static_cast<std::size_t>(ni) * (nj + 1));
  for (int j = 0; j <= nj; ++j)
    for (int i = 0; i < ni; ++i) jface_[i + ni * j] = face_geometry(vertex(i + 1, j), vertex(i, j));
}

StructuredGrid2D StructuredGrid2D::cartesian(double x0, double x1, double y0, double y1, int ni, int nj) {
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(ni + 1) * (nj + 1));
  for (int j = 0; j <= nj; ++j)
    for (int i = 0; i <= ni; ++i)
      v.push_back({x0 + (x1 - x0) * i / ni, y0 + (y1 - y0) * j / nj});
  return StructuredGrid2D(ni, nj, std::move(v));
}

Point2 StructuredGrid2D::centroid(int i, int j) const {
  const Point2 &a = vertex(i, j), &b = vertex(i + 1, j), &c = vertex(i + 1, j + 1), &d = vertex(i, j + 1);
  return {0.25 * (a.x + b.x + c.x + d.x), 0.25 * (a.y + b.y + c.y + d.y)};
}

StructuredGrid2D StructuredGrid2D::rotated_quarter_turn() const {
  std::vector<Point2> v(vertices_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = {-vertices_[k].y, vertices_[k].x};
  return StructuredGrid2D(ni_, nj_, std::move(v));
}

std::string_view to_string(Bc2DKind kind) {
  switch (kind) {
    case Bc2DKind::SupersonicInflow: return "inflow";
    case Bc2DKind::SupersonicOutflow: return "outflow";
    case Bc2DKind::SlipWall: return "slip-wall";
    case Bc2DKind::PostShockDirichlet: return "dirichlet";
  }
  return "unknown";
}

Prim2D slip_wall_ghost(const Prim2D& interior, const FaceGeometry& wall) {
  const double un = interior.u * wall.nx + interior.v * wall.ny;
  return {interior.rho, interior.u - 2.0 * un * wall.nx, interior.v - 2.0 * un * wall.ny, interior.p};
}

double compute_dt_2d(const StructuredGrid2D& grid, const std::vector<Prim2D>& w,
                     const GasModel& gas, double cfl) {
  double dt = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.nj(); ++j) {
    for (int i = 0; i < grid.ni(); ++i) {
      const Prim2D& c = w[grid.cell_index(i, j)];
      const double a = sound_speed(c, gas);
      double sum = 0.0;
      for (const FaceGeometry* f : {&grid.iface(i, j), &grid.iface(i + 1, j), &grid.jface(i, j), &grid.jface(i, j + 1)})
        sum += (std::abs(c.u * f->nx + c.v * f->ny) + a) * f->ds;
      dt = std::min(dt, grid.area(i, j) / sum);
    }
  }
  return cfl * dt;
}

std::vector<Cons2D> fv_step_2d(const StructuredGrid2D& grid, const std::vector<Cons2D>& q,
                               const Boundaries2D& bc, const Solver2DConfig& cfg,
                               const GasModel& gas, double dt, long step, double time) {
  validate(cfg);
  if (q.size() != static_cast<std::size_t>(grid.cell_count()))
    throw std::invalid_argument("state size does not match the grid");
  Stepper2D s(grid, bc, cfg, gas);
  s.set_context(step, time);
  std::vector<Cons2D> out = q;
  step_with(s, out, cfg.order, dt);
  return out;
}

Result2D advance_2d(const StructuredGrid2D& grid, const std::vector<Prim2D>& initial,
                    const Boundaries2D& bc, const Solver2DConfig& cfg, const GasModel& gas) {
  validate(cfg);
  if (initial.size() != static_cast<std::size_t>(grid.cell_count()))
    throw std::invalid_argument("initial state size does not match the grid");
  std::vector<Cons2D> q(initial.size());
  for (std::size_t m = 0; m < q.size(); ++m) {
    require_physical(initial[m], static_cast<long>(m));
    q[m] = prim_to_cons(initial[m], gas);
  }

  Stepper2D s(grid, bc, cfg, gas);
  Result2D res;
  res.min_rho = std::numeric_limits<double>::infinity();
  res.min_p = std::numeric_limits<double>::infinity();
  auto track = [&](const std::vector<Prim2D>& w) {
    for (const Prim2D& c : w) {
      res.min_rho = std::min(res.min_rho, c.rho);
      res.min_p = std::min(res.min_p, c.p);
    }
  };

  double t = 0.0;
  long step = 0;
  double peak = 0.0;
  while (t < cfg.t_final) {
    if (step >= cfg.max_steps) break;
    s.set_context(step + 1, t);
    const std::vector<Prim2D> w = s.primitives(q);
    track(w);
    double dt = cfg.fixed_dt > 0.0 ? cfg.fixed_dt : compute_dt_2d(grid, w, gas, cfg.cfl);
    if (!(dt > 0.0) || !std::isfinite(dt)) s.fail(-1, "invalid time step");
    bool last = false;
    if (t + dt >= cfg.t_final) {
      dt = cfg.t_final - t;
      last = true;
    }
    const double r = step_with(s, q, cfg.order, dt);
    ++step;
    t = last ? cfg.t_final : t + dt;
    res.residual.push_back(r);
    peak = std::max(peak, r);
    if (cfg.steady_drop > 0.0 && peak > 0.0 && r <= cfg.steady_drop * peak) {
      res.steady = true;
      break;
    }
  }

  s.set_context(step, t);
  res.w = s.primitives(q);
  track(res.w);
  res.time = t;
  res.steps = step;
  res.completed = t >= cfg.t_final || res.steady;
  return res;
}

}  // namespace cpsplit
