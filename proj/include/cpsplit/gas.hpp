#pragma once

// Ideal-gas states for the 1D Euler equations.

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace cpsplit {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Conserved vector (rho, rho*u, rho*E).
using Conserved = Vec3;
/// Flux vector (mass, momentum, energy).
using Flux = Vec3;

/// Calorically perfect gas with constant specific-heat ratio.
class GasModel {
 public:
  explicit GasModel(double gamma = 1.4);

  double gamma() const { return gamma_; }
  double gm1() const { return gamma_ - 1.0; }

 private:
  double gamma_;
};

struct Primitive {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

/// Raised for a state with non-positive density or pressure.
/// `cell` is -1 when the state is not attached to a grid cell.
class NonPhysicalState : public std::runtime_error {
 public:
  NonPhysicalState(double rho, double p, long cell = -1, const std::string& where = {});

  double rho() const { return rho_; }
  double p() const { return p_; }
  long cell() const { return cell_; }

 private:
  double rho_;
  double p_;
  long cell_;
};

bool is_physical(const Primitive& w);
void require_physical(const Primitive& w, long cell = -1);

Conserved prim_to_cons(const Primitive& w, const GasModel& gas);
Primitive cons_to_prim(const Conserved& q, const GasModel& gas, long cell = -1);

double sound_speed(const Primitive& w, const GasModel& gas);
/// Specific total energy E = p / (rho (gamma-1)) + u^2/2.
double total_energy(const Primitive& w, const GasModel& gas);
/// Specific internal energy e = p / (rho (gamma-1)).
double internal_energy(const Primitive& w, const GasModel& gas);

Flux physical_flux(const Primitive& w, const GasModel& gas);

}  // namespace cpsplit
