#pragma once

// 1D benchmark cases, error norms against reference solutions and
// convergence diagnostics.

#include "cpsplit/fds.hpp"
#include "cpsplit/solver1d.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cpsplit {

enum class ReferenceKind { ExactRiemann, TranslatedSmooth, None };

std::string_view to_string(ReferenceKind kind);

struct CaseSpec {
  std::string name;
  std::string summary;
  double x_min = 0.0;
  double x_max = 1.0;
  /// Location of the initial jump for Riemann-type cases.
  double x0 = 0.5;
  /// Constant states on either side of x0 (Riemann cases only).
  Primitive left;
  Primitive right;
  /// Point-wise initial condition.
  std::function<Primitive(double)> initial;
  BoundaryPair bc;
  double t_final = 0.0;
  int default_cells = 100;
  double default_cfl = 0.8;
  ReferenceKind reference = ReferenceKind::ExactRiemann;
  std::vector<double> snapshot_times;
};

std::vector<CaseSpec> case_registry();
/// Throws std::invalid_argument for an unknown name.
CaseSpec find_case(const std::string& name);

struct ErrorReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

enum class Variable { Density, Velocity, Pressure };

/// L1 = sum|e| dx, L2 = sqrt(sum e^2 dx), Linf = max|e|, sampled at cell centers.
ErrorReport error_norms(const Grid1D& grid, const std::vector<Primitive>& numerical,
                        const std::function<Primitive(double)>& reference,
                        Variable var = Variable::Density);

/// Reference solution of `spec` at time t. Throws std::invalid_argument for
/// cases without one.
std::function<Primitive(double)> reference_solution(const CaseSpec& spec, double t,
                                                    const GasModel& gas);

/// s = (log e1 - log e2) / (log h1 - log h2).
double eoc(double e1, double h1, double e2, double h2);

struct RunOptions {
  SchemeKind scheme = SchemeKind::ZbsFds;
  int order = 1;
  double limiter_k = 0.1;
  std::optional<int> cells;
  std::optional<double> cfl;
  std::optional<double> t_final;
};

Grid1D case_grid(const CaseSpec& spec, int cells);
std::vector<Primitive> initial_cells(const CaseSpec& spec, const Grid1D& grid);
Result1D run_case(const CaseSpec& spec, const RunOptions& opts, const GasModel& gas);

struct ConvergenceRow {
  int cells = 0;
  double h = 0.0;
  ErrorReport err;
  /// Orders against the previous row; empty for the first row.
  std::optional<ErrorReport> order;
};

std::vector<ConvergenceRow> convergence_study(const CaseSpec& spec, RunOptions opts,
                                              const std::vector<int>& cells, const GasModel& gas);

struct SteadyShock {
  double mach = 0.0;
  Primitive left;
  Primitive right;
};

/// Stationary shock with upstream state rho=1, u=1, p=1/(gamma M^2).
SteadyShock steady_shock(double mach, const GasModel& gas);

struct Error3Row {
  double mach = 0.0;
  double error3 = 0.0;
  /// max(|rho E|_l, |rho E|_r).
  double scale = 0.0;
  double density_ratio = 0.0;
};

std::vector<Error3Row> error3_sweep(const std::vector<double>& machs, const GasModel& gas);

struct FanCheck {
  int cells_checked = 0;
  /// Largest ratio of a density jump to the mean of its neighbours' jumps.
  double worst_ratio = 0.0;
  bool pass = false;
};

/// Expansion-shock proxy: inside the exact left rarefaction no density jump
/// may exceed `factor` times the mean of the two neighbouring jumps.
FanCheck rarefaction_monotonicity(const CaseSpec& spec, const Result1D& res, const GasModel& gas,
                                  double factor = 5.0);

}  // namespace cpsplit
