#include "cpsplit/euler2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpsplit {

bool is_physical(const Prim2D& w) {
  return w.rho > 0.0 && w.p > 0.0 && std::isfinite(w.rho) && std::isfinite(w.p) &&
         std::isfinite(w.u) && std::isfinite(w.v);
}

void require_physical(const Prim2D& w, long cell) {
  if (!is_physical(w)) throw NonPhysicalState(w.rho, w.p, cell);
}

double total_energy(const Prim2D& w, const GasModel& gas) {
  return w.p / (w.rho * gas.gm1()) + 0.5 * (w.u * w.u + w.v * w.v);
}

Cons2D prim_to_cons(const Prim2D& w, const GasModel& gas) {
  require_physical(w);
  return {w.rho, w.rho * w.u, w.rho * w.v, w.p / gas.gm1() + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

Prim2D cons_to_prim2d(const Cons2D& q, const GasModel& gas, long cell) {
  const double rho = q[0];
  if (!(rho > 0.0) || !std::isfinite(rho)) throw NonPhysicalState(rho, NAN, cell);
  const double u = q[1] / rho, v = q[2] / rho;
  const double p = gas.gm1() * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / rho);
  Prim2D w{rho, u, v, p};
  if (!is_physical(w)) throw NonPhysicalState(rho, p, cell);
  return w;
}

double sound_speed(const Prim2D& w, const GasModel& gas) {
  require_physical(w);
  return std::sqrt(gas.gamma() * w.p / w.rho);
}

FaceGeometry face_geometry(const Point2& a, const Point2& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double ds = std::hypot(dx, dy);
  if (!(ds > 0.0)) throw std::invalid_argument("degenerate face of zero length");
  return {dy / ds, -dx / ds, ds};
}

Vec4 normal_flux(const Prim2D& w, const FaceGeometry& g, const GasModel& gas) {
  const double un = w.u * g.nx + w.v * g.ny;
  const double re = w.rho * total_energy(w, gas);
  return {w.rho * un, w.rho * w.u * un + w.p * g.nx, w.rho * w.v * un + w.p * g.ny,
          (re + w.p) * un};
}

SplitFlux2D split_flux_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas) {
  require_physical(w);
  const double un = w.u * g.nx + w.v * g.ny;
  const double re = w.rho * total_energy(w, gas);
  return {un * Vec4(w.rho, w.rho * w.u, w.rho * w.v, re), Vec4(0.0, w.p * g.nx, w.p * g.ny, w.p * un)};
}

Mat4 convection_jacobian_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas) {
  require_physical(w);
  const double un = w.u * g.nx + w.v * g.ny;
  const Vec4 x1(1.0, w.u, w.v, total_energy(w, gas));
  const Vec4 ell(-un, g.nx, g.ny, 0.0);
  return un * Mat4::Identity() + x1 * ell.transpose();
}

Mat4 pressure_jacobian_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas) {
  require_physical(w);
  const double un = w.u * g.nx + w.v * g.ny;
  const double th = 0.5 * (w.u * w.u + w.v * w.v);
  const Vec4 dp = gas.gm1() * Vec4(th, -w.u, -w.v, 1.0);
  const double p_rho = w.p / w.rho;
  Mat4 a;
  a.row(0).setZero();
  a.row(1) = g.nx * dp.transpose();
  a.row(2) = g.ny * dp.transpose();
  a.row(3) = un * dp.transpose() + p_rho * Vec4(-un, g.nx, g.ny, 0.0).transpose();
  return a;
}

FreeParams default_chain_params(const FaceGeometry& g) { return {0.0, g.nx, g.ny, 0.0}; }

EigenSystem convection_eigensystem_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas,
                                      const FreeParams& params) {
  require_physical(w);
  const double un = w.u * g.nx + w.v * g.ny;
  const double lhs = g.nx * params.x2 + g.ny * params.x3;
  const double rhs = 1.0 + un * params.x1;
  const double scale = std::max({1.0, std::abs(un * params.x1), std::abs(params.x2), std::abs(params.x3)});
  if (std::abs(lhs - rhs) > 1e-12 * scale)
    throw std::invalid_argument("free parameters violate nx x2 + ny x3 = 1 + un x1");
  EigenSystem sys;
  sys.free_params = params;
  sys.eigenvalues = {un, un, un, un};
  sys.vectors.resize(4, 4);
  sys.vectors.col(0) << 1.0, w.u, w.v, total_energy(w, gas);
  sys.vectors.col(1) << params.x1, params.x2, params.x3, params.x4;
  sys.vectors.col(2) << 0.0, -g.ny, g.nx, 0.0;
  sys.vectors.col(3) << 0.0, 0.0, 0.0, 1.0;
  sys.chain_prev = {-1, 0, -1, -1};
  return sys;
}

EigenSystem convection_eigensystem_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas) {
  return convection_eigensystem_2d(w, g, gas, default_chain_params(g));
}

Eigen::Matrix<double, 4, 3> convection_eigenvectors_2d(const Prim2D& w, const FaceGeometry& g) {
  const double un = w.u * g.nx + w.v * g.ny;
  Eigen::Matrix<double, 4, 3> r;
  r.col(0) << g.nx, un, 0.0, 0.0;
  r.col(1) << g.ny, 0.0, un, 0.0;
  r.col(2) << 0.0, 0.0, 0.0, 1.0;
  return r;
}

EigenSystem pressure_eigensystem_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas) {
  require_physical(w);
  const double gam = gas.gamma(), gm1 = gas.gm1();
  const double a = std::sqrt(gam * w.p / w.rho);
  const double un = w.u * g.nx + w.v * g.ny;
  const double ut = -w.u * g.ny + w.v * g.nx;
  const double th = 0.5 * (w.u * w.u + w.v * w.v);
  const double c = std::sqrt(gm1 / gam) * a;
  const double phi = a / std::sqrt(gam * gm1);
  EigenSystem sys;
  sys.eigenvalues = {-c, 0.0, 0.0, c};
  sys.vectors.resize(4, 4);
  sys.vectors.col(0) << 0.0, g.nx, g.ny, un - phi;
  sys.vectors.col(1) << ut, w.u * ut + th * g.ny, w.v * ut - th * g.nx, 0.0;
  sys.vectors.col(2) << 1.0, g.nx * un, g.ny * un, un * un - th;
  sys.vectors.col(3) << 0.0, g.nx, g.ny, un + phi;
  sys.chain_prev = {-1, -1, -1, -1};
  return sys;
}

Prim2D Averages2D::state(const GasModel& gas) const {
  return {rho_bar, u_bar, v_bar, a2_bar * rho_bar / gas.gamma()};
}

Averages2D interface_averages_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g,
                                 const GasModel& gas) {
  require_physical(wl);
  require_physical(wr);
  const double sl = std::sqrt(wl.rho), sr = std::sqrt(wr.rho);
  const double inv = 1.0 / (sl + sr);
  Averages2D avg;
  avg.rho_bar = sl * sr;
  avg.u_bar = (sl * wl.u + sr * wr.u) * inv;
  avg.v_bar = (sl * wl.v + sr * wr.v) * inv;
  avg.a2_bar = (sl * gas.gamma() * wl.p / wl.rho + sr * gas.gamma() * wr.p / wr.rho) * inv;
  avg.un_bar = avg.u_bar * g.nx + avg.v_bar * g.ny;
  avg.ut_bar = -avg.u_bar * g.ny + avg.v_bar * g.nx;
  avg.theta2_bar = 0.5 * (avg.u_bar * avg.u_bar + avg.v_bar * avg.v_bar);
  return avg;
}

Deltas2D jumps_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g) {
  Deltas2D d;
  d.rho = wr.rho - wl.rho;
  d.u = wr.u - wl.u;
  d.v = wr.v - wl.v;
  d.p = wr.p - wl.p;
  d.un = d.u * g.nx + d.v * g.ny;
  d.ut = -d.u * g.ny + d.v * g.nx;
  return d;
}

WaveStrengths2D wave_strengths_2d(const Averages2D& avg, const Deltas2D& d, const GasModel& gas) {
  WaveStrengths2D s;
  const double half_mom = 0.5 * avg.rho_bar * d.un;
  const double acoustic = std::sqrt(gas.gamma() / gas.gm1()) * d.p / (2.0 * std::sqrt(avg.a2_bar));
  s.alpha[0] = half_mom - acoustic;
  s.alpha[3] = half_mom + acoustic;
  s.denominator = avg.theta2_bar - avg.un_bar * avg.un_bar;
  s.conditioning = std::abs(s.denominator) / std::max(avg.theta2_bar, avg.a2_bar);
  if (s.conditioning < kThetaRegularization) {
    s.regularized = true;
    s.alpha[1] = 0.0;
    s.alpha[2] = d.rho;
  } else {
    s.alpha[1] = (avg.ut_bar * d.rho + avg.rho_bar * d.ut) / s.denominator;
    s.alpha[2] = d.rho - avg.ut_bar * s.alpha[1];
  }
  return s;
}

Cons2D averaged_jump_2d(const Averages2D& avg, const Deltas2D& d, const GasModel& gas) {
  const double rb = avg.rho_bar, ub = avg.u_bar, vb = avg.v_bar;
  return {d.rho, rb * d.u + ub * d.rho, rb * d.v + vb * d.rho,
          d.p / gas.gm1() + avg.theta2_bar * d.rho + rb * (ub * d.u + vb * d.v)};
}

Dissipation2D zbs_dissipation_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g,
                                 const GasModel& gas) {
  const Averages2D avg = interface_averages_2d(wl, wr, g, gas);
  const Deltas2D d = jumps_2d(wl, wr, g);
  Dissipation2D out;
  out.convection = std::abs(avg.un_bar) * averaged_jump_2d(avg, d, gas);

  const WaveStrengths2D s = wave_strengths_2d(avg, d, gas);
  const double ab = std::sqrt(avg.a2_bar);
  const double c = std::sqrt(gas.gm1() / gas.gamma()) * ab;
  const double phi = ab / std::sqrt(gas.gamma() * gas.gm1());
  const Vec4 r1(0.0, g.nx, g.ny, avg.un_bar - phi);
  const Vec4 r4(0.0, g.nx, g.ny, avg.un_bar + phi);
  // R2 and R3 carry zero speed.
  out.pressure = c * (s.alpha[0] * r1 + s.alpha[3] * r4);
  return out;
}

Vec4 interface_flux_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g,
                       const GasModel& gas) {
  const Vec4 d = zbs_dissipation_2d(wl, wr, g, gas).total();
  return 0.5 * (normal_flux(wl, g, gas) + normal_flux(wr, g, gas)) - 0.5 * d;
}

}  // namespace cpsplit
