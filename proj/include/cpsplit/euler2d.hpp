#pragma once

// Two-dimensional Zha-Bilgen split flux, its eigenstructure and the 2D
// ZBS-FDS face flux.

#include "cpsplit/gas.hpp"
#include "cpsplit/splitting.hpp"

#include <Eigen/Core>

#include <array>

namespace cpsplit {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct Prim2D {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

/// (rho, rho u, rho v, rho E).
using Cons2D = Vec4;

bool is_physical(const Prim2D& w);
void require_physical(const Prim2D& w, long cell = -1);
Cons2D prim_to_cons(const Prim2D& w, const GasModel& gas);
Prim2D cons_to_prim2d(const Cons2D& q, const GasModel& gas, long cell = -1);
double sound_speed(const Prim2D& w, const GasModel& gas);
double total_energy(const Prim2D& w, const GasModel& gas);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Unit normal (dy, -dx)/ds of the directed segment a -> b and its length.
struct FaceGeometry {
  double nx = 1.0;
  double ny = 0.0;
  double ds = 1.0;
};

/// Throws std::invalid_argument for a zero-length face.
FaceGeometry face_geometry(const Point2& a, const Point2& b);

/// Flux through a face with unit normal n: (rho un, rho u un + p nx,
/// rho v un + p ny, (rho E + p) un).
Vec4 normal_flux(const Prim2D& w, const FaceGeometry& g, const GasModel& gas);

struct SplitFlux2D {
  Vec4 convection;
  Vec4 pressure;

  Vec4 total() const { return convection + pressure; }
};

/// Fc = un (rho, rho u, rho v, rho E), Fp = (0, p nx, p ny, p un).
SplitFlux2D split_flux_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas);

Mat4 convection_jacobian_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas);
Mat4 pressure_jacobian_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas);

/// Default generalized-vector constants x1 = 0, (x2, x3) = (nx, ny), x4 = 0.
FreeParams default_chain_params(const FaceGeometry& g);

/// Basis {X1, X2, T, E4}: X1 = (1, u, v, E) heads the order-two chain,
/// X2 = (x1, x2, x3, x4) with nx x2 + ny x3 = 1 + un x1, T = (0, -ny, nx, 0)
/// and E4 = (0, 0, 0, 1). T equals (nx R2 - ny R1)/un for the eigenvectors
/// R1 = (nx, un, 0, 0), R2 = (ny, 0, un, 0) and stays valid at un = 0, where
/// R1 and R2 become parallel. Throws std::invalid_argument if the params
/// violate the chain constraint.
EigenSystem convection_eigensystem_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas,
                                      const FreeParams& params);
EigenSystem convection_eigensystem_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas);

/// The three eigenvectors (nx, un, 0, 0), (ny, 0, un, 0), (0, 0, 0, 1).
Eigen::Matrix<double, 4, 3> convection_eigenvectors_2d(const Prim2D& w, const FaceGeometry& g);

/// Eigenvalues {-c, 0, 0, c}, c = sqrt((g-1)/g) a, with
/// R1,4 = (0, nx, ny, un -/+ a/sqrt(g(g-1))), R2 = (ut, u ut + Th ny,
/// v ut - Th nx, 0), R3 = (1, nx un, ny un, un^2 - Th); Th = (u^2+v^2)/2.
/// R2 vanishes for u = v = 0.
EigenSystem pressure_eigensystem_2d(const Prim2D& w, const FaceGeometry& g, const GasModel& gas);

struct Averages2D {
  double rho_bar = 0.0;
  double u_bar = 0.0;
  double v_bar = 0.0;
  double a2_bar = 0.0;
  double un_bar = 0.0;
  double ut_bar = 0.0;
  double theta2_bar = 0.0;

  Prim2D state(const GasModel& gas) const;
};

Averages2D interface_averages_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g,
                                 const GasModel& gas);

struct Deltas2D {
  double rho = 0.0;
  double un = 0.0;
  double ut = 0.0;
  double p = 0.0;
  double u = 0.0;
  double v = 0.0;
};

Deltas2D jumps_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g);

/// |Theta^2 - un^2| below kThetaRegularization * max(Theta^2, a^2) counts as
/// degenerate.
inline constexpr double kThetaRegularization = 1e-8;

struct WaveStrengths2D {
  std::array<double, 4> alpha{};
  /// Theta^2 - un^2 at the averaged state.
  double denominator = 0.0;
  /// |denominator| / max(Theta^2, a^2).
  double conditioning = 0.0;
  /// True when alpha2 was set to 0 and alpha3 to drho.
  bool regularized = false;
};

WaveStrengths2D wave_strengths_2d(const Averages2D& avg, const Deltas2D& d, const GasModel& gas);

/// Conserved jump written through the averages; the energy row is
/// dp/(g-1) + Th drho + rho_bar (u du + v dv).
Cons2D averaged_jump_2d(const Averages2D& avg, const Deltas2D& d, const GasModel& gas);

struct Dissipation2D {
  Vec4 convection = Vec4::Zero();
  Vec4 pressure = Vec4::Zero();

  Vec4 total() const { return convection + pressure; }
};

Dissipation2D zbs_dissipation_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g,
                                 const GasModel& gas);

/// Face flux per unit length, (F_L + F_R)/2 - D/2.
Vec4 interface_flux_2d(const Prim2D& wl, const Prim2D& wr, const FaceGeometry& g,
                       const GasModel& gas);

}  // namespace cpsplit
