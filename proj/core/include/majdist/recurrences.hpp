#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/shapes.hpp"
#include "majdist/tableaux.hpp"

namespace majdist {

/// Thread-safe memo of oracle distributions, shared by the verification
/// suites so that each shape is enumerated once.
class OracleCache {
 public:
  explicit OracleCache(OracleConfig config = {}) : config_(config) {}

  const DescentDistribution& get(const SkewShape& s);

  // f_{parts, i}. Zero when parts is not weakly decreasing and nonnegative,
  // or when i < 0. Trailing zero parts are ignored.
  QPoly f(const std::vector<int>& parts, int i);

  // Same distribution split by the (1-based) row holding the largest entry:
  // key (row, descents).
  const std::map<std::pair<int, int>, QPoly>& by_max_row(const Partition& p);
  QPoly f_max_row(const std::vector<int>& parts, int row, int i);

  // Skew (n, k) \ (j) split by the smallest entry of the top row: key
  // (entry, descents).
  const std::map<std::pair<int, int>, QPoly>& by_top_row_start(const SkewShape& s);

 private:
  using Split = std::map<std::pair<int, int>, QPoly>;

  OracleConfig config_;
  std::mutex mutex_;
  std::map<SkewShape, std::unique_ptr<DescentDistribution>> dists_;
  std::map<Partition, std::unique_ptr<Split>> max_row_;
  std::map<SkewShape, std::unique_ptr<Split>> top_start_;
};

struct IdentityCheck {
  std::string label;
  QPoly lhs;
  QPoly rhs;
  bool holds() const { return lhs == rhs; }
};

// The f_star recurrence for i > 1 as an identity between formula values:
// f*(n,k,j,i) = f*(n-1,k,j,i) + sum_{l=1}^{k-1} q^{n-j+k-l} f*(n-1,k-l,j,i-1).
IdentityCheck fstar_recurrence(int n, int k, int j, int i);

// Five row-of-maximum identities for the shape (n, k, 2), N = n + k + 1,
// each with the oracle on both sides: labels "row1", "row2", "row3",
// "row3_of_nk1" and "combined".
std::vector<IdentityCheck> nk2_proof_identities(int n, int k, int i, OracleCache& cache);

// Three-row recurrence removing cells from each row of (l1, l2, l3). The
// printed form sums over every nonempty S in {1..l}; the corrected form
// keeps only S containing l. lhs is the oracle.
IdentityCheck three_row_recurrence(int l1, int l2, int l3, int i, bool printed, OracleCache& cache);

// Recurrence on the position of n in the first row, summing over skew
// remainders mu = lambda / nu with nu_1 = lambda_1 and nu_2 < lambda_1.
IdentityCheck first_row_recurrence(const Partition& lambda, int i, OracleCache& cache);

}  // namespace majdist
