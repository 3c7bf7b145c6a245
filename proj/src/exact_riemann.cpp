#include "cpsplit/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace cpsplit {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kResidualTol = 1e-10;

std::string no_convergence_message(double p, double r) {
  std::ostringstream os;
  os.precision(17);
  os << "exact Riemann solver did not converge: last p=" << p << " residual=" << r;
  return os.str();
}

struct Branch {
  double f;
  double df;
};

// Pressure function of one side and its derivative.
Branch side(double p, const Primitive& w, double a, const GasModel& gas) {
  const double g = gas.gamma();
  if (p > w.p) {
    const double A = 2.0 / ((g + 1.0) * w.rho);
    const double B = (g - 1.0) / (g + 1.0) * w.p;
    const double q = std::sqrt(A / (p + B));
    return {(p - w.p) * q, q * (1.0 - 0.5 * (p - w.p) / (B + p))};
  }
  const double z = (g - 1.0) / (2.0 * g);
  const double ratio = p / w.p;
  return {2.0 * a / (g - 1.0) * (std::pow(ratio, z) - 1.0),
          std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (w.rho * a)};
}

double star_density(double p_star, const Primitive& w, const GasModel& gas) {
  const double g = gas.gamma();
  const double ratio = p_star / w.p;
  if (p_star > w.p) {
    const double g6 = (g - 1.0) / (g + 1.0);
    return w.rho * (ratio + g6) / (g6 * ratio + 1.0);
  }
  return w.rho * std::pow(ratio, 1.0 / g);
}

}  // namespace

RiemannNoConvergence::RiemannNoConvergence(double last_p, double residual)
    : std::runtime_error(no_convergence_message(last_p, residual)),
      last_p_(last_p),
      residual_(residual) {}

double pressure_function(double p, const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  const double al = sound_speed(wl, gas), ar = sound_speed(wr, gas);
  return side(p, wl, al, gas).f + side(p, wr, ar, gas).f + (wr.u - wl.u);
}

StarState solve_star(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  const double g = gas.gamma();
  const double al = sound_speed(wl, gas), ar = sound_speed(wr, gas);
  const double du = wr.u - wl.u;
  if (2.0 * (al + ar) / (g - 1.0) <= du) throw VacuumError("initial data generate vacuum");

  const double pmax = std::max(wl.p, wr.p);
  const double z = (g - 1.0) / (2.0 * g);
  const double num = al + ar - 0.5 * (g - 1.0) * du;
  const double den = al / std::pow(wl.p, z) + ar / std::pow(wr.p, z);
  double p = std::max(std::pow(num / den, 1.0 / z), 1e-8 * pmax);

  StarState star;
  double residual = 0.0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const Branch l = side(p, wl, al, gas);
    const Branch r = side(p, wr, ar, gas);
    residual = l.f + r.f + du;
    double next = p - residual / (l.df + r.df);
    // Stay in the positive half line.
    if (next <= 0.0) next = 0.5 * p;
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    star.iterations = it;
    if (change < 1e-15) break;
  }
  residual = pressure_function(p, wl, wr, gas);
  // A stalled iteration is still accepted when the residual is small enough.
  if (!std::isfinite(residual) || std::abs(residual) > kResidualTol * pmax)
    throw RiemannNoConvergence(p, residual);

  star.p_star = p;
  star.u_star = 0.5 * (wl.u + wr.u) + 0.5 * (side(p, wr, ar, gas).f - side(p, wl, al, gas).f);
  star.rho_star_l = star_density(p, wl, gas);
  star.rho_star_r = star_density(p, wr, gas);
  return star;
}

Primitive sample(const StarState& star, const Primitive& wl, const Primitive& wr,
                 const GasModel& gas, double xi) {
  const double g = gas.gamma();
  const double g1 = (g - 1.0) / (2.0 * g);
  const double g2 = (g + 1.0) / (2.0 * g);
  const double ps = star.p_star, us = star.u_star;

  if (xi <= us) {
    const double al = sound_speed(wl, gas);
    if (ps > wl.p) {
      const double s = wl.u - al * std::sqrt(g2 * ps / wl.p + g1);
      if (xi <= s) return wl;
      return {star.rho_star_l, us, ps};
    }
    const double head = wl.u - al;
    if (xi <= head) return wl;
    const double as = al * std::pow(ps / wl.p, g1);
    const double tail = us - as;
    if (xi > tail) return {star.rho_star_l, us, ps};
    const double c = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * al) * (wl.u - xi);
    return {wl.rho * std::pow(c, 2.0 / (g - 1.0)),
            2.0 / (g + 1.0) * (al + 0.5 * (g - 1.0) * wl.u + xi),
            wl.p * std::pow(c, 2.0 * g / (g - 1.0))};
  }

  const double ar = sound_speed(wr, gas);
  if (ps > wr.p) {
    const double s = wr.u + ar * std::sqrt(g2 * ps / wr.p + g1);
    if (xi >= s) return wr;
    return {star.rho_star_r, us, ps};
  }
  const double head = wr.u + ar;
  if (xi >= head) return wr;
  const double as = ar * std::pow(ps / wr.p, g1);
  const double tail = us + as;
  if (xi < tail) return {star.rho_star_r, us, ps};
  const double c = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * ar) * (wr.u - xi);
  return {wr.rho * std::pow(c, 2.0 / (g - 1.0)),
          2.0 / (g + 1.0) * (-ar + 0.5 * (g - 1.0) * wr.u + xi),
          wr.p * std::pow(c, 2.0 * g / (g - 1.0))};
}

ExactRiemann::ExactRiemann(const Primitive& wl, const Primitive& wr, const GasModel& gas, double x0)
    : wl_(wl), wr_(wr), gas_(gas), x0_(x0), star_(solve_star(wl, wr, gas)) {}

Primitive ExactRiemann::at(double x, double t) const {
  if (t <= 0.0) return x < x0_ ? wl_ : wr_;
  return sample(star_, wl_, wr_, gas_, (x - x0_) / t);
}

}  // namespace cpsplit
