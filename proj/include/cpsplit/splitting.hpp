#pragma once

// Convection-pressure splittings of the 1D Euler flux, their Jacobians and
// (generalized) eigenstructure.

#include "cpsplit/gas.hpp"

#include <Eigen/Core>

#include <string_view>
#include <vector>

namespace cpsplit {

enum class SplittingKind { LiouSteffen, ZhaBilgen, ToroVazquez };

std::string_view to_string(SplittingKind kind);

struct SplitFlux {
  Flux convection;
  Flux pressure;

  Flux total() const { return convection + pressure; }
};

/// Arbitrary constants of a generalized eigenvector. The 1D chains use x1 and
/// x3; the 2D convection chain uses all four.
struct FreeParams {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;
};

/// Eigenvalues plus a (possibly generalized) eigenvector basis stored column
/// by column. chain_prev[k] >= 0 marks column k as a generalized vector with
/// A X_k = lambda_k X_k + X_{chain_prev[k]}; -1 marks an ordinary eigenvector.
/// A defective system without a completed chain has complete == false and
/// only its independent eigenvectors as columns.
struct EigenSystem {
  std::vector<double> eigenvalues;
  Eigen::MatrixXd vectors;
  std::vector<int> chain_prev;
  bool complete = true;
  FreeParams free_params;

  int size() const { return static_cast<int>(vectors.cols()); }
};

SplitFlux split_flux(SplittingKind kind, const Primitive& w, const GasModel& gas);

Mat3 convection_jacobian(SplittingKind kind, const Primitive& w, const GasModel& gas);
Mat3 pressure_jacobian(SplittingKind kind, const Primitive& w, const GasModel& gas);

/// ZB: basis {(1,u,E), (x1, 1+u x1, x3), (0,0,1)} with the second column
/// chained to the first. TV: basis {(0,0,1), (1,u,u^2/2), (x1, 1+u x1,
/// u + u^2 x1/2)} with the third column chained to the second. LS is left
/// incomplete (two eigenvectors only).
EigenSystem convection_eigensystem(SplittingKind kind, const Primitive& w, const GasModel& gas,
                                   const FreeParams& params = {});

EigenSystem pressure_eigensystem(SplittingKind kind, const Primitive& w, const GasModel& gas);

}  // namespace cpsplit
