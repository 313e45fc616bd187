#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace majdist {

using Integer = mpz_class;

/**
 * Dense univariate polynomial in q with arbitrary-precision integer
 * coefficients. coeffs()[e] is the coefficient of q^e.
 *
 * Always canonical: the leading stored coefficient is nonzero, and the zero
 * polynomial stores nothing. Every generating function in the library is a
 * QPoly.
 */
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Integer& c);
  static QPoly monomial(int exponent, const Integer& c = 1);
  // 1 - q^m; zero when m == 0.
  static QPoly one_minus_q_pow(int m);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int min_degree() const;
  Integer coeff(int exponent) const;
  Integer evaluate(const Integer& q) const;
  Integer at_one() const;
  bool has_nonnegative_coeffs() const;

  QPoly shifted(int s) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void canonicalize();

  std::vector<Integer> coeffs_;
};

// q^s * p. s must be nonnegative.
QPoly shift(const QPoly& p, int s);

// p / d when d divides p exactly; throws InexactDivision otherwise and
// DomainError when d is zero.
QPoly exact_div(const QPoly& p, const QPoly& d);

// (q)_m = (1-q)(1-q^2)...(1-q^m); (q)_0 = 1.
QPoly q_pochhammer(int m);

// Gaussian binomial [M choose N]_q by the q-Pascal recurrence (memoized).
// Zero when N < 0, M < 0, or M < N; one when N == 0 <= M.
QPoly gauss_binomial(int M, int N);

// Same value through the Pochhammer quotient (q)_M / ((q)_N (q)_{M-N}).
// Kept as an independent cross-check of gauss_binomial.
QPoly gauss_binomial_quotient(int M, int N);

struct ShapeStats {
  bool symmetric = true;
  bool unimodal = true;
  int min_deg = -1;
  int max_deg = -1;
  // min_deg + max_deg. Undefined for the zero polynomial.
  std::optional<int> darga;
};

ShapeStats shape_stats(const QPoly& p);

// q^D * p(1/q). Throws DomainError("negative exponent") when D < degree(p).
QPoly reciprocal_shift(const QPoly& p, int D);

// Human-readable rendering, e.g. "1 + 2q + q^2".
std::string to_string(const QPoly& p);

}  // namespace majdist
