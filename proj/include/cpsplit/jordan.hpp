#pragma once

// Jordan-structure checks for the small structured Jacobians of the split
// Euler systems.

#include "cpsplit/splitting.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace cpsplit {

struct JordanDecomposition {
  Eigen::MatrixXd P;
  Eigen::MatrixXd J;
};

/// Singular values at or below rank_rel_tol * sigma_max count as zero.
inline constexpr double kRankRelTol = 1e-9;

/// Raised when a singular value sits too close to the rank threshold to
/// decide the rank. `gap` is the ratio of the smallest value counted as
/// nonzero to the threshold.
class RankInconclusive : public std::runtime_error {
 public:
  RankInconclusive(int power, double gap);
  int power() const { return power_; }
  double gap() const { return gap_; }

 private:
  int power_;
  double gap_;
};

class SingularBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol = kRankRelTol);

/// Sizes of the Jordan blocks belonging to `lambda`, largest first, derived
/// from the rank sequence of (A - lambda I)^k.
std::vector<int> jordan_block_signature(const Eigen::MatrixXd& a, double lambda,
                                        double rel_tol = kRankRelTol);

/// Geometric multiplicity of `lambda`, i.e. n - rank(A - lambda I).
int geometric_multiplicity(const Eigen::MatrixXd& a, double lambda, double rel_tol = kRankRelTol);

/// Assembles P (columns in `order`, default identity order) and the Jordan
/// matrix implied by the system's eigenvalues and chain links. A chained
/// column must directly follow its predecessor in `order`.
JordanDecomposition jordan_decomposition(const EigenSystem& sys, std::vector<int> order = {});

/// max-abs entry of P^-1 A P - J.
double verify_jordan(const Eigen::MatrixXd& a, const JordanDecomposition& decomp);

/// Largest ||A X_k - lambda_k X_k - X_prev|| over the columns of `sys`,
/// (X_prev = 0 for ordinary eigenvectors), in the max-abs norm.
double chain_residual(const Eigen::MatrixXd& a, const EigenSystem& sys);

double max_abs(const Eigen::MatrixXd& m);

}  // namespace cpsplit
