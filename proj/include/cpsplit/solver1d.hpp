#pragma once

// Explicit finite-volume driver for the 1D Euler equations.

#include "cpsplit/fds.hpp"
#include "cpsplit/gas.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cpsplit {

struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 100;

  Grid1D() = default;
  Grid1D(double lo, double hi, int n);

  double dx() const { return (x_max - x_min) / n_cells; }
  double center(int i) const { return x_min + (i + 0.5) * dx(); }
};

enum class Boundary { Transmissive, Reflective, Periodic };

struct BoundaryPair {
  Boundary left = Boundary::Transmissive;
  Boundary right = Boundary::Transmissive;
};

struct TimeControls {
  double cfl = 0.8;
  double t_final = 0.0;
  long max_steps = 10'000'000;
  /// When positive, every step uses this dt (clipped to output times).
  double fixed_dt = 0.0;
};

struct Reconstruction {
  int order = 1;
  double limiter_k = 0.1;
};

struct Solver1DConfig {
  SchemeKind scheme = SchemeKind::ZbsFds;
  Reconstruction recon;
  BoundaryPair bc;
  TimeControls time;
  /// Extra output times strictly inside (0, t_final); the step size is
  /// clipped to land on each of them.
  std::vector<double> snapshot_times;
};

/// Raised when the solution leaves the physical state space. Carries the
/// step being computed, the interior cell index and the time at the start of
/// that step.
class SolverBlowUp : public std::runtime_error {
 public:
  SolverBlowUp(long step, long cell, double time, const std::string& detail);

  long step() const { return step_; }
  long cell() const { return cell_; }
  double time() const { return time_; }

 private:
  long step_;
  long cell_;
  double time_;
};

struct Snapshot {
  double time = 0.0;
  std::vector<Primitive> w;
};

struct Result1D {
  Grid1D grid;
  std::vector<Primitive> w;
  double time = 0.0;
  long steps = 0;
  double dt_min = 0.0;
  double dt_max = 0.0;
  /// False when max_steps ran out before t_final.
  bool completed = false;
  std::vector<Snapshot> snapshots;
};

/// dt = cfl dx / max_i(|u_i| + a_i).
double compute_dt(const std::vector<Primitive>& w, const GasModel& gas, double dx, double cfl);

/// Venkatakrishnan-limited slope from the backward and forward differences,
/// with eps2 = (K dx)^3.
double limited_slope(double d_minus, double d_plus, double eps2);

struct FaceValues {
  /// Value at the left face of each cell, v_i - s_i/2.
  std::vector<double> minus;
  /// Value at the right face of each cell, v_i + s_i/2.
  std::vector<double> plus;
};

/// Limited piecewise-linear reconstruction of one variable. The first and
/// last entries act as ghosts and get zero slope.
FaceValues muscl_reconstruct(const std::vector<double>& v, double dx, double k);

Result1D advance(const Grid1D& grid, std::vector<Primitive> initial, const Solver1DConfig& cfg,
                 const GasModel& gas);

}  // namespace cpsplit
