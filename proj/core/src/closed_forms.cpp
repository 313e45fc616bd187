#include "majdist/closed_forms.hpp"

#include <algorithm>
#include <functional>

#include "majdist/errors.hpp"
#include "majdist/schur.hpp"

namespace majdist {

namespace {

QPoly G(int M, int N) { return gauss_binomial(M, N); }
QPoly om(int m) { return QPoly::one_minus_q_pow(m); }

QPoly sh(const QPoly& p, int s) { return p.is_zero() ? p : shift(p, s); }

QPoly product(std::initializer_list<QPoly> factors) {
  QPoly out{1};
  for (const auto& f : factors) {
    out *= f;
    if (out.is_zero()) break;
  }
  return out;
}

// q^s * num / den, where den must divide num.
QPoly quotient(const QPoly& num, const QPoly& den, int s, const char* what) {
  if (num.is_zero()) return {};
  try {
    return shift(exact_div(num, den), s);
  } catch (const InexactDivision&) {
    throw InternalError(std::string("product form does not divide: ") + what);
  }
}

void require_partition(bool ok) {
  if (!ok) throw DomainError("not a partition");
}

void require_domain(bool ok) {
  if (!ok) throw DomainError("out of theorem domain");
}

void require_nonnegative_i(int i) {
  if (i < 0) throw DomainError("descent count must be nonnegative");
}

}  // namespace

QPoly f_two_row_difference(int n, int k, int i) {
  return sh(G(n, i) * G(k, i) - G(n + 1, i) * G(k - 1, i), i * i);
}

QPoly f_two_row_product(int n, int k, int i) {
  if (i < 1) throw DomainError("product form needs i >= 1");
  return quotient(product({om(n - k + 1), G(n, i - 1), G(k - 1, i - 1)}), om(i), k + i * i - i,
                  "two-row");
}

QPoly f_two_row(int n, int k, int i) {
  require_partition(n >= k && k >= 0);
  require_nonnegative_i(i);
  if (i == 0) return k == 0 ? QPoly{1} : QPoly{};
  QPoly diff = f_two_row_difference(n, k, i);
  if (diff != f_two_row_product(n, k, i)) {
    throw InternalError("two-row clauses disagree");
  }
  return diff;
}

QPoly f_two_row_skew(int n, int k, int j, int i) {
  require_domain(n >= k && k > 0 && j >= 0 && j < n && i >= 1);
  return sh(G(n - j, i) * G(k, i) - G(n + 1, i) * G(k - j - 1, i), i * i);
}

QPoly f_skew_r_summand(int n, int k, int j, int i, int r) {
  require_domain(n >= k && k > 0 && j >= 0 && j < n && i >= 1 && r >= 1 && r <= j + 1);
  return sh(G(n - j, i) * G(k - r, i - 1) - G(n - r + 1, i - 1) * G(k - j - 1, i),
            i * i + i * (r - 1));
}

QPoly f_star(int n, int k, int j, int i) { return f_skew_r_summand(n, k, j, i, 1); }

QPoly f_star_unchecked(int n, int k, int j, int i) {
  return sh(G(n - j, i) * G(k - 1, i - 1) - G(n, i - 1) * G(k - j - 1, i), i * i);
}

QPoly f_two_row_skew_rsum(int n, int k, int j, int i) {
  QPoly acc;
  for (int r = 1; r <= j + 1; ++r) acc += f_skew_r_summand(n, k, j, i, r);
  return acc;
}

std::vector<TelescopingTerm> telescoping_terms(int n, int k, int j, int i) {
  require_domain(n >= k && k > 0 && j >= 0 && j < n && i >= 1);
  std::vector<TelescopingTerm> out;
  for (int s = 0; s <= j; ++s) {
    TelescopingTerm t;
    t.s = s;
    t.first = n - s;
    t.second = k - j + s;
    t.value = f_two_row_difference(t.first, t.second, i);
    out.push_back(std::move(t));
  }
  return out;
}

QPoly f_hook_nk1(int n, int k, int i) {
  require_partition(n >= k && k >= 1);
  require_nonnegative_i(i);
  if (i == 0) return {};
  return quotient(product({om(n - k + 1), om(i - 1), G(k, i - 1), G(n + 1, i - 1)}),
                  om(i) * om(1), k + i * i - 2 * i + 2, "(n,k,1)");
}

QPoly f_nk2(int n, int k, int i) {
  require_partition(n >= k && k >= 2);
  require_nonnegative_i(i);
  if (i <= 1) return {};
  return quotient(product({om(n - k + 1), om(k - 1), om(n), G(n + 1, i - 2), G(k, i - 2)}),
                  product({om(i - 1), om(1), om(2)}), k + i * i - 3 * i + 6, "(n,k,2)");
}

QPoly f_max_descents(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("f_max_descents needs a nonempty partition");
  const auto parts = lambda.parts();
  const Partition alpha(std::vector<int>(parts.begin() + 1, parts.end()));
  const int d = lambda.size() - lambda.first();
  return sh(jt_e_specialization(SkewShape(conjugate(alpha)), lambda.first()), d * (d + 1) / 2);
}

QPoly f_three_row_full(int n, int j, int k) {
  require_domain(n >= j && j >= k && k >= 0);
  QPoly value = sh(G(n, j) * G(n, k) - sh(G(n, j + 1) * G(n, k - 1), j - k + 1),
                   j * j + j * k + k * k);
  if (n > 0 && value != f_max_descents(Partition({n, j, k}))) {
    throw InternalError("three-row maximum-descent formulas disagree");
  }
  return value;
}

QPoly f_n33_i6_difference(int n) {
  return sh(G(n, 3) * G(n, 3), 27) - sh(G(n, 4) * G(n, 2), 28);
}

QPoly f_n33(int n, int i) {
  require_partition(n >= 3);
  switch (i) {
    case 2:
      return sh(G(n - 1, 2), 9);
    case 3:
      return sh(G(n - 1, 2) * G(n + 3, 1), 11) + sh(G(n, 3) * G(4, 1), 12);
    case 4:
      return sh(G(n - 1, 2) * G(n + 2, 2), 15) + sh(G(n + 1, 4) * G(5, 2), 15);
    case 5:
      return sh(G(n - 1, 2) * G(n + 1, 3), 21) + sh(G(n + 1, 4) * G(n + 3, 1), 20);
    case 6: {
      QPoly value = quotient(product({om(n - 2), om(n - 1), om(n - 1), om(n), om(n), om(n + 1)}),
                             product({om(1), om(2), om(2), om(3), om(3), om(4)}), 27, "(n,3,3)");
      if (value != f_n33_i6_difference(n)) throw InternalError("(n,3,3) i=6 clauses disagree");
      return value;
    }
    default:
      throw DomainError("no formula clause for i = " + std::to_string(i));
  }
}

QPoly stanley_distribution(const Partition& lambda) {
  const HookData h = hook_data(lambda);
  QPoly den{1};
  for (const auto& row : h.hooks) {
    for (int hook : row) den *= om(hook);
  }
  int s = 0;
  for (int r = 0; r < lambda.length(); ++r) s += r * lambda[r];
  return quotient(q_pochhammer(lambda.size()), den, s, "hook product");
}

QPoly two_row_total(int n, int k) {
  require_domain(k >= 0 && n >= 2 * k);
  return G(n, k) - G(n, k - 1);
}

LemmaSides lemma_skew_sum(int A, int i, int j) {
  if (A < 0 || i < 1 || j < 0) throw DomainError("lemma needs A >= 0, i >= 1, j >= 0");
  LemmaSides out;
  for (int R = 0; R <= j; ++R) out.lhs += sh(G(A - R - 1, i - 1), i * R);
  out.rhs = G(A, i) - sh(G(A - j - 1, i), i * (j + 1));
  return out;
}

QPoly conj_nn3_i3(int n) {
  require_partition(n >= 3);
  return sh(G(n + 2, 1) * G(n, 3) * G(2, 1), n + 8);
}

QPoly conj_n44_i3(int n) {
  require_partition(n >= 4);
  return sh(G(n - 2, 2) * G(n, 1) * G(6, 1), 14) -
         quotient(product({om(4), om(n - 3), om(n - 3), om(n - 2)}),
                  product({om(1), om(1), om(2), om(2)}), 17, "(n,4,4)");
}

QPoly conj_nk3_i2(int n, int k) {
  require_partition(n >= k && k >= 3);
  return quotient(product({om(n - 1), om(n - k + 1), om(k - 2)}), product({om(1), om(1), om(2)}),
                  k + 6, "(n,k,3)");
}

QPoly conj_n43_i3(int n) {
  require_partition(n >= 4);
  return quotient(product({om(5), om(n - 3), om(n), om(n)}),
                  product({om(1), om(1), om(1), om(2)}), 12, "(n,4,3)") +
         sh(G(n - 2, 2) * G(n + 4, 1), 13);
}

QPoly conj_n53_i3(int n) {
  require_partition(n >= 5);
  const QPoly den = product({om(1), om(1), om(1), om(2)});
  return quotient(product({om(5), om(n - 3), om(n - 1), om(n + 2)}), den, 13, "(n,5,3)") +
         quotient(product({om(6), om(n - 5), om(n - 1), om(n + 1)}), den, 14, "(n,5,3)");
}

std::string to_string(FormulaStatus s) {
  return s == FormulaStatus::theorem ? "theorem" : "conjecture";
}

namespace {

struct FormulaSpec {
  std::vector<std::string> params;
  FormulaStatus status;
  std::function<QPoly(const std::vector<int>&)> eval;
};

const std::map<std::string, FormulaSpec>& registry() {
  using V = const std::vector<int>&;
  static const std::map<std::string, FormulaSpec> table = {
      {"two_row", {{"n", "k", "i"}, FormulaStatus::theorem,
                   [](V a) { return f_two_row(a[0], a[1], a[2]); }}},
      {"two_row_skew", {{"n", "k", "j", "i"}, FormulaStatus::theorem,
                        [](V a) { return f_two_row_skew(a[0], a[1], a[2], a[3]); }}},
      {"f_star", {{"n", "k", "j", "i"}, FormulaStatus::theorem,
                  [](V a) { return f_star(a[0], a[1], a[2], a[3]); }}},
      {"hook_nk1", {{"n", "k", "i"}, FormulaStatus::theorem,
                    [](V a) { return f_hook_nk1(a[0], a[1], a[2]); }}},
      {"nk2", {{"n", "k", "i"}, FormulaStatus::theorem,
               [](V a) { return f_nk2(a[0], a[1], a[2]); }}},
      {"three_row_full", {{"n", "j", "k"}, FormulaStatus::theorem,
                          [](V a) { return f_three_row_full(a[0], a[1], a[2]); }}},
      {"n33", {{"n", "i"}, FormulaStatus::theorem, [](V a) { return f_n33(a[0], a[1]); }}},
      {"two_row_total", {{"n", "k"}, FormulaStatus::theorem,
                         [](V a) { return two_row_total(a[0], a[1]); }}},
      {"nn3_i3", {{"n"}, FormulaStatus::conjecture, [](V a) { return conj_nn3_i3(a[0]); }}},
      {"n44_i3", {{"n"}, FormulaStatus::conjecture, [](V a) { return conj_n44_i3(a[0]); }}},
      {"nk3_i2", {{"n", "k"}, FormulaStatus::conjecture,
                  [](V a) { return conj_nk3_i2(a[0], a[1]); }}},
      {"n43_i3", {{"n"}, FormulaStatus::conjecture, [](V a) { return conj_n43_i3(a[0]); }}},
      {"n53_i3", {{"n"}, FormulaStatus::conjecture, [](V a) { return conj_n53_i3(a[0]); }}},
  };
  return table;
}

}  // namespace

FormulaResult evaluate_formula(const std::string& id, const Params& params) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw DomainError("unknown formula id: " + id);
  const FormulaSpec& spec = it->second;
  std::vector<int> args;
  for (const auto& name : spec.params) {
    const auto p = params.find(name);
    if (p == params.end()) throw DomainError("formula " + id + " needs parameter " + name);
    args.push_back(p->second);
  }
  for (const auto& [name, value] : params) {
    if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end()) {
      throw DomainError("formula " + id + " takes no parameter " + name);
    }
  }
  return {spec.eval(args), id, spec.status, params};
}

FormulaResult conjecture_formula(const std::string& id, const Params& params) {
  const auto it = registry().find(id);
  if (it == registry().end() || it->second.status != FormulaStatus::conjecture) {
    throw DomainError("unknown conjecture id: " + id);
  }
  return evaluate_formula(id, params);
}

std::vector<std::string> formula_ids() {
  std::vector<std::string> out;
  for (const auto& [id, spec] : registry()) out.push_back(id);
  return out;
}

std::vector<std::string> conjecture_ids() {
  std::vector<std::string> out;
  for (const auto& [id, spec] : registry()) {
    if (spec.status == FormulaStatus::conjecture) out.push_back(id);
  }
  return out;
}

}  // namespace majdist
