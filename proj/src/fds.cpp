#include "cpsplit/fds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cpsplit {

std::string_view to_string(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::ZbsFds: return "zbs";
    case SchemeKind::TvsFds: return "tvs";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  if (name == "zbs") return SchemeKind::ZbsFds;
  if (name == "tvs") return SchemeKind::TvsFds;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "' (expected zbs or tvs)");
}

double InterfaceAverages::a_bar() const { return std::sqrt(a2_bar); }

Primitive InterfaceAverages::state(const GasModel& gas) const {
  return {rho_bar, u_bar, a2_bar * rho_bar / gas.gamma()};
}

InterfaceAverages interface_averages(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  require_physical(wl);
  require_physical(wr);
  const double sl = std::sqrt(wl.rho), sr = std::sqrt(wr.rho);
  const double inv = 1.0 / (sl + sr);
  const double a2l = gas.gamma() * wl.p / wl.rho;
  const double a2r = gas.gamma() * wr.p / wr.rho;
  InterfaceAverages avg;
  avg.rho_bar = sl * sr;
  avg.u_bar = (sl * wl.u + sr * wr.u) * inv;
  avg.a2_bar = (sl * a2l + sr * a2r) * inv;
  avg.beta_bar = std::sqrt(avg.u_bar * avg.u_bar + 4.0 * avg.a2_bar);
  return avg;
}

Deltas jumps(const Primitive& wl, const Primitive& wr) {
  return {wr.rho - wl.rho, wr.u - wl.u, wr.p - wl.p};
}

Conserved averaged_jump(const InterfaceAverages& avg, const Deltas& d, const GasModel& gas) {
  const double ub = avg.u_bar, rb = avg.rho_bar;
  return {d.rho, rb * d.u + ub * d.rho,
          d.p / gas.gm1() + 0.5 * (ub * ub * d.rho + 2.0 * rb * ub * d.u)};
}

WaveStrengths zbs_pressure_strengths(const InterfaceAverages& avg, const Deltas& d,
                                     const GasModel& gas) {
  const double half_mom = 0.5 * avg.rho_bar * d.u;
  const double acoustic = std::sqrt(gas.gamma() / gas.gm1()) * d.p / (2.0 * avg.a_bar());
  return {{half_mom - acoustic, d.rho, half_mom + acoustic}};
}

WaveStrengths tvs_pressure_strengths(const InterfaceAverages& avg, const Deltas& d) {
  const double half_mom = 0.5 * avg.rho_bar * d.u;
  const double skew = avg.rho_bar * avg.u_bar * d.u / (2.0 * avg.beta_bar) - d.p / avg.beta_bar;
  return {{half_mom + skew, d.rho, half_mom - skew}};
}

namespace {

// Convection jump without the pressure contribution to the energy row.
Conserved convective_jump(const InterfaceAverages& avg, const Deltas& d) {
  const double ub = avg.u_bar, rb = avg.rho_bar;
  return {d.rho, rb * d.u + ub * d.rho, 0.5 * (ub * ub * d.rho + 2.0 * rb * ub * d.u)};
}

}  // namespace

Dissipation zbs_dissipation_parts(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  const InterfaceAverages avg = interface_averages(wl, wr, gas);
  const Deltas d = jumps(wl, wr);
  const double ub = avg.u_bar, ab = avg.a_bar(), gm1 = gas.gm1();

  Dissipation out;
  // All three convection eigenvalues equal u_bar, so the Jordan basis drops out.
  out.convection = std::abs(ub) * averaged_jump(avg, d, gas);

  const WaveStrengths s = zbs_pressure_strengths(avg, d, gas);
  const double lam = std::sqrt(gm1 / gas.gamma()) * ab;
  const double c = ab / std::sqrt(gas.gamma() * gm1);
  const Vec3 r1(0.0, 1.0, ub - c);
  const Vec3 r3(0.0, 1.0, ub + c);
  // The middle wave has zero speed and never contributes.
  out.pressure = s.alpha[0] * lam * r1 + s.alpha[2] * lam * r3;
  return out;
}

Dissipation tvs_dissipation_parts(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  const InterfaceAverages avg = interface_averages(wl, wr, gas);
  const Deltas d = jumps(wl, wr);
  const double ub = avg.u_bar, bb = avg.beta_bar, gm1 = gas.gm1();

  Dissipation out;
  // |u| (dU - alpha_c1 R_c1) with R_c1 = (0,0,1), alpha_c1 = dp/(g-1).
  out.convection = std::abs(ub) * convective_jump(avg, d);

  const WaveStrengths s = tvs_pressure_strengths(avg, d);
  const double lam1 = 0.5 * (ub - bb);
  const double lam3 = 0.5 * (ub + bb);
  const Vec3 r1(0.0, 1.0, ub + lam1 / gm1);
  const Vec3 r3(0.0, 1.0, ub + lam3 / gm1);
  out.pressure = s.alpha[0] * std::abs(lam1) * r1 + s.alpha[2] * std::abs(lam3) * r3;
  return out;
}

Flux zbs_dissipation(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  return zbs_dissipation_parts(wl, wr, gas).total();
}

Flux tvs_dissipation(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  return tvs_dissipation_parts(wl, wr, gas).total();
}

Flux interface_flux(SchemeKind scheme, const Primitive& wl, const Primitive& wr,
                    const GasModel& gas) {
  const Flux d = scheme == SchemeKind::ZbsFds ? zbs_dissipation(wl, wr, gas)
                                               : tvs_dissipation(wl, wr, gas);
  return 0.5 * (physical_flux(wl, gas) + physical_flux(wr, gas)) - 0.5 * d;
}

double error3(const Primitive& wl, const Primitive& wr, const GasModel& gas) {
  const InterfaceAverages avg = interface_averages(wl, wr, gas);
  const Deltas d = jumps(wl, wr);
  const double de = prim_to_cons(wr, gas)[2] - prim_to_cons(wl, gas)[2];
  const double ub = avg.u_bar;
  return de - d.p / gas.gm1() - 0.5 * (ub * ub * d.rho + 2.0 * avg.rho_bar * ub * d.u);
}

}  // namespace cpsplit
