#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>

namespace epquad {

/// Dense quadratic operator H in R^{n x n^2} acting on x (x) x.
///
/// The operator is stored as n sub-matrices H = [H_1, ..., H_n]; the entry
/// in row j and column k of sub-matrix i multiplies the product x_i * x_k in
/// the j-th output component. Indices are 0-based throughout the C++ API;
/// file formats and error messages use the 1-based convention, where the
/// flat column of (i, k) is (i-1)*n + k.
///
/// Immutable after construction; all operations on it are pure.
class QuadOp {
 public:
  explicit QuadOp(Eigen::MatrixXd entries);

  static QuadOp zero(int n);

  int dim() const noexcept { return n_; }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }

  /// Sub-matrix H_i as an n x n view.
  Eigen::Block<const Eigen::MatrixXd> sub(int i) const {
    return entries_.block(0, static_cast<Eigen::Index>(i) * n_, n_, n_);
  }

  /// Entry h at (sub-matrix, row, col), 0-based.
  double entry(int sub, int row, int col) const {
    return entries_(row, static_cast<Eigen::Index>(sub) * n_ + col);
  }

  double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

 private:
  int n_;
  Eigen::MatrixXd entries_;
};

/// y = H (x (x) x), evaluated sub-matrix by sub-matrix as
/// y = sum_i x_i * (H_i x); never materializes the Kronecker vector.
Eigen::VectorXd apply_quad(const QuadOp& H, const Eigen::VectorXd& x);

/// x^T H (x (x) x): the quadratic term's instantaneous kinetic-energy
/// contribution at state x.
double energy_residual(const QuadOp& H, const Eigen::VectorXd& x);

struct EnergyPreservationReport {
  bool preserving = false;
  double worst_residual = 0.0;
  std::array<int, 3> worst_triple{0, 0, 0};  // 0-based (i <= j <= k)
  double scale = 1.0;                        // max(1, ||H||_max)
  std::int64_t conditions_checked = 0;
  std::string describe() const;  // 1-based indices in the text
};

/// Checks the six-entry cyclic sum
///   h_{i_{j,k}} + h_{i_{k,j}} + h_{j_{i,k}} + h_{j_{k,i}} + h_{k_{i,j}} + h_{k_{j,i}}
/// for every index multiset i <= j <= k. Preserving iff every |sum| is at
/// most tol * max(1, ||H||_max).
EnergyPreservationReport is_energy_preserving(const QuadOp& H, double tol);

/// Sum of the two entries that multiply x_p * x_q in output row `row`.
double pair_sum(const QuadOp& H, int row, int p, int q);

/// True iff H and G induce the same quadratic map. Primary check is the
/// exact pair-sum condition over all rows and unordered column pairs;
/// `trials` random unit vectors additionally probe ||(H-G)(x (x) x)||.
/// Tolerance is relative to max(1, ||H||_max, ||G||_max).
bool operators_equivalent(const QuadOp& H, const QuadOp& G, int trials,
                          double tol);

/// max_i || H_i + H_i^T ||_max — zero iff every sub-matrix is skew-symmetric.
double max_subblock_symmetry(const QuadOp& H);

}  // namespace epquad
