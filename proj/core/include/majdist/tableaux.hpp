#pragma once

#include <functional>
#include <map>
#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/shapes.hpp"

namespace majdist {

/// A standard filling of a (skew) shape with 1..cell_count. Rows increase left
/// to right, columns increase top to bottom.
class StandardTableau {
 public:
  StandardTableau() = default;
  // entries[r] lists row r's values left to right; its length must equal the
  // shape's row length. Throws DomainError if the filling is not standard.
  StandardTableau(SkewShape shape, std::vector<std::vector<int>> entries);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  // Row (0-based, top = 0) holding value v, 1 <= v <= size().
  int row_of(int v) const { return row_of_[static_cast<std::size_t>(v - 1)]; }
  int size() const { return static_cast<int>(row_of_.size()); }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> entries_;
  std::vector<int> row_of_;
};

struct DescentStats {
  std::vector<int> descent_set;  // ascending
  int des = 0;
  int maj = 0;
};

// Descent at i when i sits in a strictly higher row than i+1. The entry 1 is
// never the bottom of a descent.
DescentStats statistics(const StandardTableau& t);

// Calls visit once per SYT of the shape. Values are placed 1..n, each into
// the frontier cells tried in row order, so the order is deterministic. The
// empty shape yields one empty tableau.
void enumerate_syt(const SkewShape& s, const std::function<void(const StandardTableau&)>& visit);

/// by_descents[i] = sum of q^maj over SYT of the shape with exactly i descents.
/// Only nonzero entries are stored.
struct DescentDistribution {
  SkewShape shape;
  std::map<int, QPoly> by_descents;
  QPoly total;

  // Zero polynomial when no tableau has i descents.
  const QPoly& at(int i) const;
  // Associative, commutative merge (for sharded computations).
  DescentDistribution& merge(const DescentDistribution& other);
};

struct OracleConfig {
  int cell_limit = 18;
  // Shapes with at most two rows use a lattice-path walk up to this size.
  int two_row_limit = 24;
};

// Exact descent/major-index distribution over all SYT of the shape. Throws
// LimitExceeded("oracle size limit") past the configured size.
DescentDistribution distribution(const SkewShape& s, const OracleConfig& config = {});

// The same distribution accumulated tableau by tableau from enumerate_syt.
DescentDistribution distribution_by_enumeration(const SkewShape& s);

// Two-row (or one-row) shapes only: walks every row-choice sequence.
DescentDistribution two_row_distribution(const SkewShape& s);

// s_shape(1, q, ..., q^{m-1}): SSYT with entries 1..m, weight q^{sum(entry-1)}.
QPoly ssyt_principal_spec(const SkewShape& s, int m);

// Same polynomial by filling cells one at a time in row-major order. Slow;
// used to validate ssyt_principal_spec on small inputs.
QPoly ssyt_principal_spec_backtrack(const SkewShape& s, int m);

}  // namespace majdist
