#include "epquad/skewrep.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "epquad/errors.hpp"

namespace epquad {

namespace {

constexpr double kEpCheckTol = 1e-9;

void check_precondition(const QuadOp& H) {
  const auto rep = is_energy_preserving(H, kEpCheckTol);
  if (!rep.preserving) {
    throw PreconditionError("input operator is " + rep.describe());
  }
}

double& ent(Eigen::MatrixXd& m, int n, int sub, int row, int col) {
  return m(row, static_cast<Eigen::Index>(sub) * n + col);
}

}  // namespace

void FreeEntrySpec::assign(int sub, int row, int col, double value) {
  if (sub == row || row == col || sub == col) {
    std::ostringstream os;
    os << "free entry (" << sub + 1 << ", " << row + 1 << ", " << col + 1
       << ") must have three distinct indices";
    throw std::invalid_argument(os.str());
  }
  if (sub < 0 || row < 0 || col < 0) {
    throw std::invalid_argument("free entry indices must be positive");
  }
  std::array<int, 3> key{sub, row, col};
  std::sort(key.begin(), key.end());
  if (entries_.count(key)) {
    std::ostringstream os;
    os << "duplicate free entry for triple {" << key[0] + 1 << ", "
       << key[1] + 1 << ", " << key[2] + 1 << "}";
    throw std::invalid_argument(os.str());
  }
  entries_[key] = FreeEntryAssignment{sub, row, col, value};
}

std::optional<FreeEntryAssignment> FreeEntrySpec::lookup(int i, int j,
                                                         int k) const {
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FreeEntrySpec::validate_for_dimension(int n) const {
  for (const auto& [key, a] : entries_) {
    if (key[2] >= n) {
      std::ostringstream os;
      os << "free entry triple {" << key[0] + 1 << ", " << key[1] + 1 << ", "
         << key[2] + 1 << "} exceeds operator dimension " << n;
      throw std::invalid_argument(os.str());
    }
  }
}

FreeEntrySpec FreeEntrySpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open free-entry spec: " + path);
  FreeEntrySpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int i, j, k;
    double value;
    if (!(ls >> i)) continue;  // blank / comment-only line
    if (!(ls >> j >> k >> value)) {
      std::ostringstream os;
      os << path << ":" << lineno << ": expected 'i j k value'";
      throw std::runtime_error(os.str());
    }
    if (i < 1 || j < 1 || k < 1) {
      std::ostringstream os;
      os << path << ":" << lineno << ": indices are 1-based";
      throw std::runtime_error(os.str());
    }
    spec.assign(i - 1, j - 1, k - 1, value);
  }
  return spec;
}

QuadOp to_skew_block(const QuadOp& H, const FreeEntrySpec& spec) {
  check_precondition(H);
  const int n = H.dim();
  spec.validate_for_dimension(n);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(n) * n);

  // Entries with two distinct indices. Sub-matrix diagonals stay zero.
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      ent(T, n, i, k, i) = H.entry(i, k, i);
      ent(T, n, k, k, i) = -H.entry(k, i, k);
      ent(T, n, i, i, k) = -ent(T, n, i, k, i);
      ent(T, n, k, i, k) = -ent(T, n, k, k, i);
    }
  }

  // Distinct triples: seed one slot per triple, then alternate the pair-sum
  // equation (row fixed, sub/col swapped) with in-block skew-symmetry until
  // the six slots of the triple are filled. Energy preservation of H makes
  // the chain consistent regardless of the seeded slot.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        FreeEntryAssignment seed{i, j, k, 0.0};
        if (auto a = spec.lookup(i, j, k)) seed = *a;
        ent(T, n, seed.sub, seed.row, seed.col) = seed.value;
        int a = seed.sub, b = seed.row, c = seed.col;
        for (int step = 0; step < 5; ++step) {
          if (step % 2 == 0) {
            const double v =
                H.entry(a, b, c) + H.entry(c, b, a) - ent(T, n, a, b, c);
            std::swap(a, c);
            ent(T, n, a, b, c) = v;
          } else {
            const double v = -ent(T, n, a, b, c);
            std::swap(b, c);
            ent(T, n, a, b, c) = v;
          }
        }
      }
    }
  }
  return QuadOp(std::move(T));
}

QuadOp to_row_skew(const QuadOp& H) {
  check_precondition(H);
  const int n = H.dim();
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(n) * n);

  // Non-repeated coefficients are pinned by equivalence; row i of sub-matrix
  // i vanishes by the structure.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) ent(T, n, i, j, i) = H.entry(i, j, i);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      ent(T, n, k, i, i) = -H.entry(i, k, i);
      ent(T, n, i, k, k) = -H.entry(k, i, k);
    }
  }

  // Distinct triples: same chain as to_skew_block with the structural step
  // swapping sub-matrix and row instead of row and column.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        ent(T, n, i, j, k) = 0.0;
        int a = i, b = j, c = k;
        for (int step = 0; step < 5; ++step) {
          if (step % 2 == 0) {
            const double v =
                H.entry(a, b, c) + H.entry(c, b, a) - ent(T, n, a, b, c);
            std::swap(a, c);
            ent(T, n, a, b, c) = v;
          } else {
            const double v = -ent(T, n, a, b, c);
            std::swap(a, b);
            ent(T, n, a, b, c) = v;
          }
        }
      }
    }
  }
  return QuadOp(std::move(T));
}

double max_row_skew_violation(const QuadOp& H) {
  const int n = H.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(H.entry(i, k, j) + H.entry(k, i, j)));
      }
    }
  }
  return worst;
}

QuadOp random_energy_preserving(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_energy_preserving: n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXd base =
      Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      for (int c = r + 1; c < n; ++c) {
        const double v = normal(rng);
        ent(base, n, i, r, c) = v;
        ent(base, n, i, c, r) = -v;
      }
    }
  }

  // Redistribute every pair sum by a random split. Pair sums are what the
  // induced quadratic map sees, so the result stays energy-preserving while
  // the blocks generically lose their skew-symmetry. Non-repeated (p == q)
  // coefficients have no permutation partner and stay as in the base.
  Eigen::MatrixXd out = base;
  for (int row = 0; row < n; ++row) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double s = ent(base, n, p, row, q) + ent(base, n, q, row, p);
        const double g = normal(rng);
        ent(out, n, p, row, q) = g;
        ent(out, n, q, row, p) = s - g;
      }
    }
  }
  return QuadOp(std::move(out));
}

std::int64_t free_entry_count(int n) {
  if (n < 1) throw std::invalid_argument("free_entry_count: n >= 1");
  const std::int64_t m = n;
  return m * (m - 1) * (m - 2) / 6;
}

}  // namespace epquad
