#include "cpsplit/jordan.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace cpsplit {

namespace {

// Singular values in (threshold, kGrayZone * threshold] make the rank
// decision ambiguous.
constexpr double kGrayZone = 1e3;

std::string inconclusive_message(int power, double gap) {
  std::ostringstream os;
  os << "rank of (A - lambda I)^" << power
     << " is inconclusive: smallest retained singular value is " << gap
     << " times the threshold";
  return os.str();
}

}  // namespace

RankInconclusive::RankInconclusive(int power, double gap)
    : std::runtime_error(inconclusive_message(power, gap)), power_(power), gap_(gap) {}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  const double thr = rel_tol * s[0];
  return static_cast<int>((s.array() > thr).count());
}

std::vector<int> jordan_block_signature(const Eigen::MatrixXd& a, double lambda, double rel_tol) {
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXd b = a - lambda * Eigen::MatrixXd::Identity(n, n);
  const double scale = Eigen::JacobiSVD<Eigen::MatrixXd>(b).singularValues()[0];
  if (scale == 0.0) return std::vector<int>(n, 1);

  std::vector<int> rank(n + 2, 0);
  rank[0] = n;
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= n + 1; ++k) {
    power = power * b;
    const double thr = rel_tol * std::pow(scale, k);
    const auto s = Eigen::JacobiSVD<Eigen::MatrixXd>(power).singularValues();
    int r = 0;
    for (int i = 0; i < s.size(); ++i) {
      if (s[i] > thr) {
        if (s[i] <= kGrayZone * thr) throw RankInconclusive(k, s[i] / thr);
        ++r;
      }
    }
    rank[k] = r;
    // rank(B^k) = rank(B^(k-1)) stays fixed for all higher powers; going on
    // would only let distinct eigenvalues decay towards the threshold.
    if (r == rank[k - 1]) {
      std::fill(rank.begin() + k, rank.end(), r);
      break;
    }
  }

  // d_k = rank_{k-1} - rank_k blocks have size >= k.
  std::vector<int> blocks;
  for (int k = n; k >= 1; --k) {
    const int at_least_k = rank[k - 1] - rank[k];
    const int at_least_k1 = rank[k] - rank[k + 1];
    for (int c = 0; c < at_least_k - at_least_k1; ++c) blocks.push_back(k);
  }
  return blocks;
}

int geometric_multiplicity(const Eigen::MatrixXd& a, double lambda, double rel_tol) {
  const int n = static_cast<int>(a.rows());
  const Eigen::MatrixXd b = a - lambda * Eigen::MatrixXd::Identity(n, n);
  return n - numerical_rank(b, rel_tol);
}

JordanDecomposition jordan_decomposition(const EigenSystem& sys, std::vector<int> order) {
  const int n = sys.size();
  if (!sys.complete || sys.vectors.rows() != n)
    throw SingularBasis("eigen system does not provide a complete basis");
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("ordering has wrong size");

  JordanDecomposition d;
  d.P.resize(n, n);
  d.J = Eigen::MatrixXd::Zero(n, n);
  for (int pos = 0; pos < n; ++pos) {
    const int col = order[pos];
    d.P.col(pos) = sys.vectors.col(col);
    d.J(pos, pos) = sys.eigenvalues[col];
    const int prev = sys.chain_prev[col];
    if (prev >= 0) {
      if (pos == 0 || order[pos - 1] != prev)
        throw std::invalid_argument("chained vector must follow its predecessor");
      d.J(pos - 1, pos) = 1.0;
    }
  }
  return d;
}

double verify_jordan(const Eigen::MatrixXd& a, const JordanDecomposition& decomp) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(decomp.P);
  if (!lu.isInvertible()) throw SingularBasis("basis matrix P is singular");
  const Eigen::MatrixXd similar = lu.solve(a * decomp.P);
  return max_abs(similar - decomp.J);
}

double chain_residual(const Eigen::MatrixXd& a, const EigenSystem& sys) {
  double worst = 0.0;
  for (int k = 0; k < sys.size(); ++k) {
    Eigen::VectorXd r = a * sys.vectors.col(k) - sys.eigenvalues[k] * sys.vectors.col(k);
    if (sys.chain_prev[k] >= 0) r -= sys.vectors.col(sys.chain_prev[k]);
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace cpsplit
