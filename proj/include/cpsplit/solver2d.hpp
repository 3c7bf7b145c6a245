#pragma once

// Structured quadrilateral grids and the explicit 2D finite-volume driver.

#include "cpsplit/euler2d.hpp"
#include "cpsplit/solver1d.hpp"

#include <vector>

namespace cpsplit {

/// (ni+1) x (nj+1) vertices; cell (i,j) has the corners (i,j), (i+1,j),
/// (i+1,j+1), (i,j+1) in counter-clockwise order. The i-face (i,j) runs from
/// vertex (i,j) to (i,j+1) and its normal points towards increasing i; the
/// j-face (i,j) runs from vertex (i+1,j) to (i,j) and points towards
/// increasing j.
class StructuredGrid2D {
 public:
  /// `vertices` is stored with i fastest. Throws std::invalid_argument for
  /// a non-positive cell area or a degenerate face.
  StructuredGrid2D(int ni, int nj, std::vector<Point2> vertices);

  static StructuredGrid2D cartesian(double x0, double x1, double y0, double y1, int ni, int nj);

  int ni() const { return ni_; }
  int nj() const { return nj_; }
  int cell_count() const { return ni_ * nj_; }
  int cell_index(int i, int j) const { return i + ni_ * j; }

  const Point2& vertex(int i, int j) const { return vertices_[i + (ni_ + 1) * j]; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  double area(int i, int j) const { return area_[cell_index(i, j)]; }
  Point2 centroid(int i, int j) const;
  const FaceGeometry& iface(int i, int j) const { return iface_[i + (ni_ + 1) * j]; }
  const FaceGeometry& jface(int i, int j) const { return jface_[i + ni_ * j]; }

  /// Vertices mapped by (x, y) -> (-y, x).
  StructuredGrid2D rotated_quarter_turn() const;

 private:
  int ni_;
  int nj_;
  std::vector<Point2> vertices_;
  std::vector<double> area_;
  std::vector<FaceGeometry> iface_;
  std::vector<FaceGeometry> jface_;
};

enum class Bc2DKind { SupersonicInflow, SupersonicOutflow, SlipWall, PostShockDirichlet };

std::string_view to_string(Bc2DKind kind);

struct Bc2D {
  Bc2DKind kind = Bc2DKind::SupersonicOutflow;
  /// Used by SupersonicInflow and PostShockDirichlet.
  Prim2D state;
};

struct Boundaries2D {
  Bc2D i_min;
  Bc2D i_max;
  Bc2D j_min;
  Bc2D j_max;
};

/// Velocity mirrored across the wall: v - 2 (v.n) n.
Prim2D slip_wall_ghost(const Prim2D& interior, const FaceGeometry& wall);

struct Solver2DConfig {
  int order = 1;
  double limiter_k = 0.1;
  double cfl = 0.5;
  double t_final = 1.0;
  long max_steps = 10'000'000;
  /// When positive, every step uses this dt (clipped to t_final).
  double fixed_dt = 0.0;
  /// When positive, stop once the density residual has dropped by this
  /// factor relative to its largest value.
  double steady_drop = 0.0;
};

struct Result2D {
  std::vector<Prim2D> w;
  double time = 0.0;
  long steps = 0;
  bool completed = false;
  bool steady = false;
  double min_rho = 0.0;
  double min_p = 0.0;
  /// L2 (cell-mean) norm of the density time derivative, one entry per step.
  std::vector<double> residual;
};

/// dt = cfl min_m A_m / sum_k (|un| + a)_k ds_k, using the state of cell m.
double compute_dt_2d(const StructuredGrid2D& grid, const std::vector<Prim2D>& w,
                     const GasModel& gas, double cfl);

/// One explicit step of size dt on conserved cell values (forward Euler for
/// order 1, two-stage SSP for order 2). Throws SolverBlowUp with the linear
/// cell index i + ni j.
std::vector<Cons2D> fv_step_2d(const StructuredGrid2D& grid, const std::vector<Cons2D>& q,
                               const Boundaries2D& bc, const Solver2DConfig& cfg,
                               const GasModel& gas, double dt, long step = 0, double time = 0.0);

Result2D advance_2d(const StructuredGrid2D& grid, const std::vector<Prim2D>& initial,
                    const Boundaries2D& bc, const Solver2DConfig& cfg, const GasModel& gas);

}  // namespace cpsplit
