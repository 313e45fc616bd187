#include "majdist/schur.hpp"

#include "majdist/errors.hpp"

namespace majdist {

QPoly polynomial_determinant(PolyMatrix m) {
  const std::size_t r = m.size();
  for (const auto& row : m) {
    if (row.size() != r) throw DomainError("determinant of a non-square matrix");
  }
  if (r == 0) return QPoly{1};
  bool negate = false;
  QPoly prev_pivot{1};
  for (std::size_t k = 0; k + 1 < r; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < r && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == r) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
      }
      m[i][k] = QPoly{};
    }
    prev_pivot = m[k][k];
  }
  QPoly det = m[r - 1][r - 1];
  return negate ? -det : det;
}

namespace {

int choose2(int x) { return x * (x - 1) / 2; }

}  // namespace

QPoly jt_h_specialization(const SkewShape& s, int m) {
  if (m < 1) throw DomainError("number of variables must be positive");
  const int r = s.rows();
  PolyMatrix mat(static_cast<std::size_t>(r), std::vector<QPoly>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const int d = s.outer()[i] - s.inner()[j] - i + j;
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gauss_binomial(m - 1 + d, d);
    }
  }
  return polynomial_determinant(std::move(mat));
}

QPoly jt_e_specialization(const SkewShape& s, int m) {
  if (m < 1) throw DomainError("number of variables must be positive");
  const Partition oc = conjugate(s.outer());
  const Partition ic = conjugate(s.inner());
  const int c = oc.length();
  PolyMatrix mat(static_cast<std::size_t>(c), std::vector<QPoly>(static_cast<std::size_t>(c)));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      const int d = oc[i] - ic[j] - i + j;
      QPoly e = gauss_binomial(m, d);
      if (!e.is_zero()) e = shift(e, choose2(d));
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
    }
  }
  return polynomial_determinant(std::move(mat));
}

std::optional<int> match_up_to_shift(const QPoly& p, const QPoly& r) {
  if (p.is_zero() || r.is_zero()) {
    if (p.is_zero() && r.is_zero()) return 0;
    return std::nullopt;
  }
  const int s = p.min_degree() - r.min_degree();
  if (p.degree() - r.degree() != s) return std::nullopt;
  for (int e = r.min_degree(); e <= r.degree(); ++e) {
    if (p.coeff(e + s) != r.coeff(e)) return std::nullopt;
  }
  return s;
}

}  // namespace majdist
