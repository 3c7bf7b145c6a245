#pragma once

// Exact Riemann solver for the 1D Euler equations of an ideal gas.

#include "cpsplit/gas.hpp"

#include <stdexcept>

namespace cpsplit {

struct StarState {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  int iterations = 0;
};

/// The data generate vacuum: 2(a_L + a_R)/(gamma-1) <= u_R - u_L.
class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RiemannNoConvergence : public std::runtime_error {
 public:
  RiemannNoConvergence(double last_p, double residual);
  double last_p() const { return last_p_; }
  double residual() const { return residual_; }

 private:
  double last_p_;
  double residual_;
};

/// f_L(p) + f_R(p) + (u_R - u_L); its root is the star pressure.
double pressure_function(double p, const Primitive& wl, const Primitive& wr, const GasModel& gas);

/// Newton iteration on the pressure function, started from the
/// two-rarefaction estimate clamped below by 1e-8 max(p_L, p_R).
StarState solve_star(const Primitive& wl, const Primitive& wr, const GasModel& gas);

/// Self-similar solution at xi = x/t.
Primitive sample(const StarState& star, const Primitive& wl, const Primitive& wr,
                 const GasModel& gas, double xi);

/// Convenience wrapper: exact solution of the problem with the jump at x0.
class ExactRiemann {
 public:
  ExactRiemann(const Primitive& wl, const Primitive& wr, const GasModel& gas, double x0 = 0.0);

  Primitive at(double x, double t) const;
  const StarState& star() const { return star_; }

 private:
  Primitive wl_;
  Primitive wr_;
  GasModel gas_;
  double x0_;
  StarState star_;
};

}  // namespace cpsplit
