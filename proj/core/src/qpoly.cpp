#include "majdist/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "majdist/errors.hpp"

namespace majdist {

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(int exponent, const Integer& c) {
  if (exponent < 0) throw DomainError("negative exponent");
  std::vector<Integer> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::one_minus_q_pow(int m) {
  if (m < 0) throw DomainError("negative exponent");
  if (m == 0) return {};
  std::vector<Integer> v(static_cast<std::size_t>(m) + 1);
  v.front() = 1;
  v.back() = -1;
  return QPoly(std::move(v));
}

void QPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int QPoly::min_degree() const {
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] != 0) return static_cast<int>(e);
  }
  return -1;
}

Integer QPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

Integer QPoly::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

Integer QPoly::at_one() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Integer& c) { return sgn(c) >= 0; });
}

QPoly QPoly::shifted(int s) const { return shift(*this, s); }

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] -= other.coeffs_[e];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
  *this = *this * other;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const Integer& x = a.coeffs_[i];
    if (x == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x.get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly(std::move(out));
}

QPoly operator-(QPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

QPoly shift(const QPoly& p, int s) {
  if (s < 0) throw DomainError("negative exponent");
  if (p.is_zero() || s == 0) return p;
  std::vector<Integer> v(static_cast<std::size_t>(s));
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return QPoly(std::move(v));
}

QPoly exact_div(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw InexactDivision(to_string(p) + " by " + to_string(d));

  std::vector<Integer> rem = p.coeffs();
  const auto& dc = d.coeffs();
  const std::size_t dn = dc.size();
  const Integer& lead = dc.back();
  std::vector<Integer> quot(rem.size() - dn + 1);
  Integer c;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InexactDivision(to_string(p) + " by " + to_string(d));
    }
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[k] = c;
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), dc[j].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw InexactDivision(to_string(p) + " by " + to_string(d));
  }
  return QPoly(std::move(quot));
}

QPoly q_pochhammer(int m) {
  if (m < 0) throw DomainError("q_pochhammer: negative index");
  QPoly acc{1};
  for (int i = 1; i <= m; ++i) acc *= QPoly::one_minus_q_pow(i);
  return acc;
}

namespace {

// Rows of the q-Pascal triangle up to this M are memoized; larger M fall back
// to the telescoping product, which stays polynomial at every step.
constexpr int kPascalCacheRows = 96;

class PascalTable {
 public:
  QPoly get(int M, int N) {
    {
      std::shared_lock lock(mutex_);
      if (M < static_cast<int>(rows_.size())) return rows_[M][N];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= M) extend();
    return rows_[M][N];
  }

 private:
  void extend() {
    const int M = static_cast<int>(rows_.size());
    std::vector<QPoly> row(static_cast<std::size_t>(M) + 1);
    row[0] = QPoly{1};
    row[M] = QPoly{1};
    for (int N = 1; N < M; ++N) {
      // [M,N] = [M-1,N] + q^{M-N} [M-1,N-1]
      row[N] = rows_[M - 1][N] + shift(rows_[M - 1][N - 1], M - N);
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<QPoly>> rows_;
};

PascalTable& pascal_table() {
  static PascalTable table;
  return table;
}

}  // namespace

QPoly gauss_binomial(int M, int N) {
  if (N < 0 || M < 0 || M < N) return {};
  if (N == 0 || N == M) return QPoly{1};
  if (M < kPascalCacheRows) return pascal_table().get(M, N);
  N = std::min(N, M - N);
  // [M-N+t, t] = [M-N+t-1, t-1] (1 - q^{M-N+t}) / (1 - q^t)
  QPoly acc{1};
  for (int t = 1; t <= N; ++t) {
    acc = exact_div(acc * QPoly::one_minus_q_pow(M - N + t), QPoly::one_minus_q_pow(t));
  }
  return acc;
}

QPoly gauss_binomial_quotient(int M, int N) {
  if (N < 0 || M < 0 || M < N) return {};
  return exact_div(q_pochhammer(M), q_pochhammer(N) * q_pochhammer(M - N));
}

ShapeStats shape_stats(const QPoly& p) {
  ShapeStats s;
  if (p.is_zero()) return s;
  const auto& c = p.coeffs();
  s.min_deg = p.min_degree();
  s.max_deg = p.degree();
  s.darga = s.min_deg + s.max_deg;
  for (int lo = s.min_deg, hi = s.max_deg; lo < hi; ++lo, --hi) {
    if (c[lo] != c[hi]) {
      s.symmetric = false;
      break;
    }
  }
  // p_0 <= ... <= p_a >= ... >= p_d over the full coefficient list.
  std::size_t e = 0;
  while (e + 1 < c.size() && c[e] <= c[e + 1]) ++e;
  while (e + 1 < c.size() && c[e] >= c[e + 1]) ++e;
  s.unimodal = (e + 1 == c.size());
  return s;
}

QPoly reciprocal_shift(const QPoly& p, int D) {
  if (p.is_zero()) return {};
  if (D < p.degree()) throw DomainError("negative exponent");
  std::vector<Integer> v(static_cast<std::size_t>(D) + 1);
  const auto& c = p.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) v[static_cast<std::size_t>(D) - e] = c[e];
  return QPoly(std::move(v));
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    Integer mag = abs(c[e]);
    if (first) {
      if (sgn(c[e]) < 0) os << "-";
    } else {
      os << (sgn(c[e]) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "q";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace majdist
