#include "cpsplit/gas.hpp"

#include <cmath>
#include <sstream>

namespace cpsplit {

namespace {

std::string describe(double rho, double p, long cell, const std::string& where) {
  std::ostringstream os;
  os.precision(17);
  os << "non-physical state";
  if (!where.empty()) os << " in " << where;
  if (cell >= 0) os << " at cell " << cell;
  os << ": rho=" << rho << " p=" << p;
  return os.str();
}

}  // namespace

GasModel::GasModel(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
}

NonPhysicalState::NonPhysicalState(double rho, double p, long cell, const std::string& where)
    : std::runtime_error(describe(rho, p, cell, where)), rho_(rho), p_(p), cell_(cell) {}

bool is_physical(const Primitive& w) {
  // Written so that NaN fails as well.
  return w.rho > 0.0 && w.p > 0.0 && std::isfinite(w.rho) && std::isfinite(w.p) &&
         std::isfinite(w.u);
}

void require_physical(const Primitive& w, long cell) {
  if (!is_physical(w)) throw NonPhysicalState(w.rho, w.p, cell);
}

Conserved prim_to_cons(const Primitive& w, const GasModel& gas) {
  require_physical(w);
  return {w.rho, w.rho * w.u, w.p / gas.gm1() + 0.5 * w.rho * w.u * w.u};
}

Primitive cons_to_prim(const Conserved& q, const GasModel& gas, long cell) {
  const double rho = q[0];
  if (!(rho > 0.0) || !std::isfinite(rho)) throw NonPhysicalState(rho, NAN, cell);
  const double u = q[1] / rho;
  const double p = gas.gm1() * (q[2] - 0.5 * q[1] * q[1] / rho);
  Primitive w{rho, u, p};
  if (!is_physical(w)) throw NonPhysicalState(rho, p, cell);
  return w;
}

double sound_speed(const Primitive& w, const GasModel& gas) {
  require_physical(w);
  return std::sqrt(gas.gamma() * w.p / w.rho);
}

double total_energy(const Primitive& w, const GasModel& gas) {
  return w.p / (w.rho * gas.gm1()) + 0.5 * w.u * w.u;
}

double internal_energy(const Primitive& w, const GasModel& gas) {
  return w.p / (w.rho * gas.gm1());
}

Flux physical_flux(const Primitive& w, const GasModel& gas) {
  const double e_tot = total_energy(w, gas);
  return {w.rho * w.u, w.p + w.rho * w.u * w.u, w.p * w.u + w.rho * w.u * e_tot};
}

}  // namespace cpsplit
