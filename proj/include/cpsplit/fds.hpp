#pragma once

// ZBS-FDS and TVS-FDS interface fluxes for the 1D Euler equations.

#include "cpsplit/gas.hpp"

#include <array>
#include <string_view>

namespace cpsplit {

enum class SchemeKind { ZbsFds, TvsFds };

std::string_view to_string(SchemeKind scheme);
/// Accepts "zbs" or "tvs" (case sensitive). Throws std::invalid_argument.
SchemeKind parse_scheme(std::string_view name);

/// Square-root-density weighted interface state.
struct InterfaceAverages {
  double rho_bar = 0.0;
  double u_bar = 0.0;
  double a2_bar = 0.0;
  double beta_bar = 0.0;

  double a_bar() const;
  /// The averaged state (rho_bar, u_bar, p_bar) with p_bar = a2_bar rho_bar / gamma.
  Primitive state(const GasModel& gas) const;
};

/// Right-minus-left jumps of the primitive variables.
struct Deltas {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

struct WaveStrengths {
  std::array<double, 3> alpha{};
};

/// Convection and pressure contributions to the interface dissipation,
/// i.e. (dF_c^+ - dF_c^-) and (dF_p^+ - dF_p^-).
struct Dissipation {
  Flux convection = Flux::Zero();
  Flux pressure = Flux::Zero();

  Flux total() const { return convection + pressure; }
};

InterfaceAverages interface_averages(const Primitive& wl, const Primitive& wr, const GasModel& gas);
Deltas jumps(const Primitive& wl, const Primitive& wr);

/// Conserved-variable jump written through the averages:
/// (drho, rho_bar du + u_bar drho, dp/(g-1) + (u_bar^2 drho + 2 rho_bar u_bar du)/2).
Conserved averaged_jump(const InterfaceAverages& avg, const Deltas& d, const GasModel& gas);

/// Strengths over the Zha-Bilgen pressure eigenvectors at the averaged state.
WaveStrengths zbs_pressure_strengths(const InterfaceAverages& avg, const Deltas& d,
                                     const GasModel& gas);
/// Strengths over the Toro-Vazquez pressure eigenvectors at the averaged state.
WaveStrengths tvs_pressure_strengths(const InterfaceAverages& avg, const Deltas& d);

Dissipation zbs_dissipation_parts(const Primitive& wl, const Primitive& wr, const GasModel& gas);
Dissipation tvs_dissipation_parts(const Primitive& wl, const Primitive& wr, const GasModel& gas);

Flux zbs_dissipation(const Primitive& wl, const Primitive& wr, const GasModel& gas);
Flux tvs_dissipation(const Primitive& wl, const Primitive& wr, const GasModel& gas);

/// F_I = (F_L + F_R)/2 - D/2. No entropy fix is applied to any wave speed.
Flux interface_flux(SchemeKind scheme, const Primitive& wl, const Primitive& wr,
                    const GasModel& gas);

/// Energy row residual of the averaged jump against the true conserved jump:
/// d(rho E) - dp/(g-1) - (u_bar^2 drho + 2 rho_bar u_bar du)/2.
double error3(const Primitive& wl, const Primitive& wr, const GasModel& gas);

}  // namespace cpsplit
