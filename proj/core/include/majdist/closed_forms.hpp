#pragma once

#include <map>
#include <string>
#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/shapes.hpp"

namespace majdist {

// Shape parameters are literal row lengths: f_two_row(n, k, i) is the
// i-descent major-index polynomial of the shape (n, k).

// i = 0 gives 1 when k == 0, otherwise 0. For i >= 1 both the product and the
// difference clause are evaluated and must agree (InternalError otherwise).
// DomainError("not a partition") when n < k or k < 0, and for i < 0.
QPoly f_two_row(int n, int k, int i);
QPoly f_two_row_difference(int n, int k, int i);
QPoly f_two_row_product(int n, int k, int i);

// Shape (n, k) \ (j). Needs n >= k > 0, 0 <= j < n, i >= 1; otherwise
// DomainError("out of theorem domain").
QPoly f_two_row_skew(int n, int k, int j, int i);
// Tableaux of (n, k) \ (j) whose smallest top-row entry is r, 1 <= r <= j+1.
// r = 1 is f_star.
QPoly f_skew_r_summand(int n, int k, int j, int i, int r);
QPoly f_star(int n, int k, int j, int i);
// The f_star expression at any integers, with no domain check.
QPoly f_star_unchecked(int n, int k, int j, int i);
// Sum of f_skew_r_summand over r = 1..j+1.
QPoly f_two_row_skew_rsum(int n, int k, int j, int i);

struct TelescopingTerm {
  int s = 0;
  int first = 0;   // n - s
  int second = 0;  // k - j + s
  QPoly value;     // two-row difference formula at (first, second, i)
  bool is_partition() const { return first >= second; }
};

// The j+1 terms whose sum is f_two_row_skew(n, k, j, i).
std::vector<TelescopingTerm> telescoping_terms(int n, int k, int j, int i);

// Shape (n, k, 1). Needs n >= k >= 1 and i >= 1.
QPoly f_hook_nk1(int n, int k, int i);

// Shape (n, k, 2). Needs n >= k >= 2 and i >= 0; i <= 1 gives 0.
QPoly f_nk2(int n, int k, int i);

// Distribution at the maximum descent count |lambda| - lambda_1, through the
// elementary Jacobi-Trudi determinant. Throws DomainError on the empty
// partition.
QPoly f_max_descents(const Partition& lambda);

// Shape (n, j, k) at j + k descents. Needs n >= j >= k >= 0. Cross-checked
// against f_max_descents.
QPoly f_three_row_full(int n, int j, int k);

// Shape (n, 3, 3) for 2 <= i <= 6 and n >= 3; DomainError("no formula
// clause") for other i.
QPoly f_n33(int n, int i);
// Difference form of the i = 6 clause.
QPoly f_n33_i6_difference(int n);

// Total major-index generating function over SYT of lambda, from hooks.
QPoly stanley_distribution(const Partition& lambda);

// [n, k] - [n, k-1], the total for shape (n-k, k). Needs n >= 2k >= 0.
QPoly two_row_total(int n, int k);

struct LemmaSides {
  QPoly lhs;
  QPoly rhs;
};

// lhs = sum_{R=0}^{j} q^{iR} [A-R-1, i-1], rhs = [A, i] - q^{i(j+1)} [A-j-1, i].
LemmaSides lemma_skew_sum(int A, int i, int j);

// Conjectured distributions.
QPoly conj_nn3_i3(int n);
QPoly conj_n44_i3(int n);
QPoly conj_nk3_i2(int n, int k);
QPoly conj_n43_i3(int n);
QPoly conj_n53_i3(int n);

using Params = std::map<std::string, int>;

enum class FormulaStatus { theorem, conjecture };

struct FormulaResult {
  QPoly value;
  std::string formula_id;
  FormulaStatus status = FormulaStatus::theorem;
  Params params;
};

std::string to_string(FormulaStatus s);

// Ids: nn3_i3, n44_i3, nk3_i2, n43_i3, n53_i3. Throws DomainError on an
// unknown id, a missing parameter, or parameters outside the shape family.
FormulaResult conjecture_formula(const std::string& id, const Params& params);

// Any formula by id: the conjecture ids above plus two_row, two_row_skew,
// f_star, hook_nk1, nk2, three_row_full, n33 and two_row_total. Parameters
// use the names of the matching function arguments.
FormulaResult evaluate_formula(const std::string& id, const Params& params);

std::vector<std::string> formula_ids();
std::vector<std::string> conjecture_ids();

}  // namespace majdist
