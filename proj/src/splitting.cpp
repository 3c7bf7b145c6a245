#include "cpsplit/splitting.hpp"

#include <cmath>
#include <stdexcept>

namespace cpsplit {

std::string_view to_string(SplittingKind kind) {
  switch (kind) {
    case SplittingKind::LiouSteffen: return "liou-steffen";
    case SplittingKind::ZhaBilgen: return "zha-bilgen";
    case SplittingKind::ToroVazquez: return "toro-vazquez";
  }
  return "unknown";
}

SplitFlux split_flux(SplittingKind kind, const Primitive& w, const GasModel& gas) {
  require_physical(w);
  const double rho = w.rho, u = w.u, p = w.p;
  const double e_tot = total_energy(w, gas);
  const double mass = rho * u;
  const double mom = rho * u * u;
  switch (kind) {
    case SplittingKind::LiouSteffen:
      return {{mass, mom, p * u + rho * u * e_tot}, {0.0, p, 0.0}};
    case SplittingKind::ZhaBilgen:
      return {{mass, mom, rho * u * e_tot}, {0.0, p, p * u}};
    case SplittingKind::ToroVazquez:
      return {{mass, mom, 0.5 * rho * u * u * u}, {0.0, p, gas.gamma() * p * u / gas.gm1()}};
  }
  throw std::invalid_argument("unknown splitting kind");
}

Mat3 convection_jacobian(SplittingKind kind, const Primitive& w, const GasModel& gas) {
  require_physical(w);
  const double u = w.u, g = gas.gamma();
  const double e_tot = total_energy(w, gas);
  Mat3 a;
  switch (kind) {
    case SplittingKind::LiouSteffen:
      a << 0.0, 1.0, 0.0,
          -u * u, 2.0 * u, 0.0,
          -g * u * e_tot + (g - 1.0) * u * u * u, g * e_tot - 1.5 * (g - 1.0) * u * u, g * u;
      return a;
    case SplittingKind::ZhaBilgen:
      a << 0.0, 1.0, 0.0,
          -u * u, 2.0 * u, 0.0,
          -u * e_tot, e_tot, u;
      return a;
    case SplittingKind::ToroVazquez:
      a << 0.0, 1.0, 0.0,
          -u * u, 2.0 * u, 0.0,
          -u * u * u, 1.5 * u * u, 0.0;
      return a;
  }
  throw std::invalid_argument("unknown splitting kind");
}

Mat3 pressure_jacobian(SplittingKind kind, const Primitive& w, const GasModel& gas) {
  require_physical(w);
  const double u = w.u, g = gas.gamma(), gm1 = gas.gm1();
  const double a2 = g * w.p / w.rho;
  Mat3 a;
  a.row(0).setZero();
  a.row(1) << 0.5 * gm1 * u * u, -gm1 * u, gm1;
  switch (kind) {
    case SplittingKind::LiouSteffen:
      a.row(2).setZero();
      return a;
    case SplittingKind::ZhaBilgen:
      a.row(2) << -a2 * u / g + 0.5 * gm1 * u * u * u, a2 / g - gm1 * u * u, gm1 * u;
      return a;
    case SplittingKind::ToroVazquez:
      a.row(2) << -u * a2 / gm1 + 0.5 * g * u * u * u, a2 / gm1 - g * u * u, g * u;
      return a;
  }
  throw std::invalid_argument("unknown splitting kind");
}

EigenSystem convection_eigensystem(SplittingKind kind, const Primitive& w, const GasModel& gas,
                                   const FreeParams& params) {
  require_physical(w);
  const double u = w.u, g = gas.gamma();
  const double e_tot = total_energy(w, gas);
  EigenSystem sys;
  sys.free_params = params;
  switch (kind) {
    case SplittingKind::LiouSteffen:
      // Weakly hyperbolic; an FDS scheme built on this splitting is unstable,
      // so the chain is never completed.
      sys.eigenvalues = {g * u, u};
      sys.vectors.resize(3, 2);
      sys.vectors.col(0) << 0.0, 0.0, 1.0;
      sys.vectors.col(1) << 1.0, u, 0.5 * u * u;
      sys.chain_prev = {-1, -1};
      sys.complete = false;
      return sys;
    case SplittingKind::ZhaBilgen:
      sys.eigenvalues = {u, u, u};
      sys.vectors.resize(3, 3);
      sys.vectors.col(0) << 1.0, u, e_tot;
      sys.vectors.col(1) << params.x1, 1.0 + u * params.x1, params.x3;
      sys.vectors.col(2) << 0.0, 0.0, 1.0;
      sys.chain_prev = {-1, 0, -1};
      return sys;
    case SplittingKind::ToroVazquez:
      sys.eigenvalues = {0.0, u, u};
      sys.vectors.resize(3, 3);
      sys.vectors.col(0) << 0.0, 0.0, 1.0;
      sys.vectors.col(1) << 1.0, u, 0.5 * u * u;
      sys.vectors.col(2) << params.x1, 1.0 + u * params.x1, u + 0.5 * u * u * params.x1;
      sys.chain_prev = {-1, -1, 1};
      return sys;
  }
  throw std::invalid_argument("unknown splitting kind");
}

EigenSystem pressure_eigensystem(SplittingKind kind, const Primitive& w, const GasModel& gas) {
  require_physical(w);
  const double u = w.u, g = gas.gamma(), gm1 = gas.gm1();
  const double a = std::sqrt(g * w.p / w.rho);
  EigenSystem sys;
  sys.vectors.resize(3, 3);
  sys.chain_prev = {-1, -1, -1};
  switch (kind) {
    case SplittingKind::LiouSteffen:
      sys.eigenvalues = {-gm1 * u, 0.0, 0.0};
      sys.vectors.col(0) << 0.0, 1.0, 0.0;
      sys.vectors.col(1) << 1.0, 0.0, -0.5 * u * u;
      sys.vectors.col(2) << 0.0, 1.0, u;
      return sys;
    case SplittingKind::ZhaBilgen: {
      const double lam = std::sqrt(gm1 / g) * a;
      const double c = a / std::sqrt(g * gm1);
      sys.eigenvalues = {-lam, 0.0, lam};
      sys.vectors.col(0) << 0.0, 1.0, u - c;
      sys.vectors.col(1) << 1.0, u, 0.5 * u * u;
      sys.vectors.col(2) << 0.0, 1.0, u + c;
      return sys;
    }
    case SplittingKind::ToroVazquez: {
      const double beta = std::sqrt(u * u + 4.0 * a * a);
      sys.eigenvalues = {0.5 * (u - beta), 0.0, 0.5 * (u + beta)};
      sys.vectors.col(0) << 0.0, 1.0, u + 0.5 * (u - beta) / gm1;
      sys.vectors.col(1) << 1.0, u, 0.5 * u * u;
      sys.vectors.col(2) << 0.0, 1.0, u + 0.5 * (u + beta) / gm1;
      return sys;
    }
  }
  throw std::invalid_argument("unknown splitting kind");
}

}  // namespace cpsplit
