#include "epquad/quadop.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace epquad {

QuadOp::QuadOp(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  const Eigen::Index rows = entries_.rows();
  if (rows < 1) {
    throw std::invalid_argument("QuadOp: state dimension must be >= 1");
  }
  if (entries_.cols() != rows * rows) {
    std::ostringstream os;
    os << "QuadOp: expected " << rows << " x " << rows * rows
       << " entries, got " << rows << " x " << entries_.cols();
    throw std::invalid_argument(os.str());
  }
  n_ = static_cast<int>(rows);
}

QuadOp QuadOp::zero(int n) {
  if (n < 1) throw std::invalid_argument("QuadOp: state dimension must be >= 1");
  return QuadOp(Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(n) * n));
}

Eigen::VectorXd apply_quad(const QuadOp& H, const Eigen::VectorXd& x) {
  const int n = H.dim();
  if (x.size() != n) {
    std::ostringstream os;
    os << "apply_quad: state has length " << x.size() << ", operator expects "
       << n;
    throw std::invalid_argument(os.str());
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] != 0.0) y.noalias() += x[i] * (H.sub(i) * x);
  }
  return y;
}

double energy_residual(const QuadOp& H, const Eigen::VectorXd& x) {
  const int n = H.dim();
  if (x.size() != n) {
    throw std::invalid_argument("energy_residual: dimension mismatch");
  }
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    if (x[i] != 0.0) acc += x[i] * x.dot(H.sub(i) * x);
  }
  return acc;
}

std::string EnergyPreservationReport::describe() const {
  std::ostringstream os;
  os << (preserving ? "energy-preserving" : "not energy-preserving")
     << "; worst triple {" << worst_triple[0] + 1 << ", "
     << worst_triple[1] + 1 << ", " << worst_triple[2] + 1 << "} has residual "
     << worst_residual << " (scale " << scale << ", " << conditions_checked
     << " conditions)";
  return os.str();
}

EnergyPreservationReport is_energy_preserving(const QuadOp& H, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_energy_preserving: tol < 0");
  const int n = H.dim();
  EnergyPreservationReport rep;
  rep.scale = std::max(1.0, H.max_abs());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        const double s = H.entry(i, j, k) + H.entry(i, k, j) +
                         H.entry(j, i, k) + H.entry(j, k, i) +
                         H.entry(k, i, j) + H.entry(k, j, i);
        ++rep.conditions_checked;
        if (std::abs(s) > rep.worst_residual) {
          rep.worst_residual = std::abs(s);
          rep.worst_triple = {i, j, k};
        }
      }
    }
  }
  rep.preserving = rep.worst_residual <= tol * rep.scale;
  return rep;
}

double pair_sum(const QuadOp& H, int row, int p, int q) {
  return H.entry(p, row, q) + H.entry(q, row, p);
}

bool operators_equivalent(const QuadOp& H, const QuadOp& G, int trials,
                          double tol) {
  const int n = H.dim();
  if (G.dim() != n) {
    throw std::invalid_argument("operators_equivalent: dimension mismatch");
  }
  if (trials < 1) {
    throw std::invalid_argument("operators_equivalent: trials must be >= 1");
  }
  const double scale = std::max({1.0, H.max_abs(), G.max_abs()});
  for (int row = 0; row < n; ++row) {
    for (int p = 0; p < n; ++p) {
      for (int q = p; q < n; ++q) {
        if (std::abs(pair_sum(H, row, p, q) - pair_sum(G, row, p, q)) >
            tol * scale) {
          return false;
        }
      }
    }
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = normal(rng);
    const double nx = x.norm();
    if (nx == 0.0) continue;
    x /= nx;
    if ((apply_quad(H, x) - apply_quad(G, x)).norm() > tol * scale) {
      return false;
    }
  }
  return true;
}

double max_subblock_symmetry(const QuadOp& H) {
  double worst = 0.0;
  for (int i = 0; i < H.dim(); ++i) {
    const Eigen::MatrixXd s = H.sub(i) + H.sub(i).transpose();
    worst = std::max(worst, s.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace epquad
