#include "majdist/kr_koh.hpp"

#include <algorithm>

#include "majdist/errors.hpp"

namespace majdist {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

void sequences_rec(const std::vector<int>& sizes, std::size_t a, AdmissibleSequence& acc,
                   std::vector<AdmissibleSequence>& out) {
  if (a == sizes.size()) {
    out.push_back(acc);
    return;
  }
  for (const auto& p : partitions_of(sizes[a])) {
    acc.alphas.push_back(p);
    sequences_rec(sizes, a + 1, acc, out);
    acc.alphas.pop_back();
  }
}

}  // namespace

int AdmissibleSequence::part(int a, int i) const {
  if (a < 0 || a >= static_cast<int>(alphas.size())) return 0;
  return alphas[static_cast<std::size_t>(a)][i - 1];
}

std::vector<AdmissibleSequence> admissible_sequences(const Partition& lambda, int k) {
  const int n = lambda.size();
  std::vector<AdmissibleSequence> out;
  if (k < 0 || k > n - lambda.first()) return out;
  // sizes[a-1] = |alpha^a| for a >= 1.
  std::vector<int> sizes;
  int removed = 0;
  for (int a = 1; a < lambda.length(); ++a) {
    removed += lambda[a - 1];
    sizes.push_back(n - removed);
  }
  AdmissibleSequence acc;
  acc.alphas.push_back(Partition({n}));
  if (sizes.empty()) {
    if (k == 0) out.push_back(acc);
    return out;
  }
  if (k == 0) return out;
  // alpha^1 has largest part exactly k.
  for (const auto& rest : partitions_of(sizes[0] - k, k)) {
    std::vector<int> parts{k};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    acc.alphas.push_back(Partition(parts));
    sequences_rec(sizes, 1, acc, out);
    acc.alphas.pop_back();
  }
  return out;
}

KrSummandDetails kr_summand_details(const AdmissibleSequence& alpha) {
  const int levels = static_cast<int>(alpha.alphas.size());
  int width = 0;
  for (const auto& p : alpha.alphas) width = std::max(width, p.length());
  KrSummandDetails d;
  for (int a = 1; a <= levels; ++a) {
    for (int i = 1; i <= width; ++i) d.c += choose2(alpha.part(a - 1, i) - alpha.part(a, i));
  }
  QPoly prod{1};
  for (int a = 1; a < levels; ++a) {
    long long P = 0;
    for (int i = 1; i <= width; ++i) {
      P += alpha.part(a - 1, i) - 2 * alpha.part(a, i) + alpha.part(a + 1, i);
      const int m = alpha.part(a, i) - alpha.part(a, i + 1);
      if (m == 0) continue;
      d.vacancy_sum += P * m;
      prod *= gauss_binomial(static_cast<int>(P) + m, m);
    }
  }
  if (!prod.is_zero()) d.value = shift(prod, static_cast<int>(d.c));
  return d;
}

QPoly kr_summand(const AdmissibleSequence& alpha) { return kr_summand_details(alpha).value; }

QPoly kr_kostka(const Partition& lambda, int k) {
  QPoly acc;
  for (const auto& alpha : admissible_sequences(lambda, k)) acc += kr_summand(alpha);
  return acc;
}

bool central_degree_identity(const AdmissibleSequence& alpha, const Partition& lambda, int k) {
  const long long n = lambda.size();
  const auto d = kr_summand_details(alpha);
  const long long target = 2 * choose2(n) - n * k;
  if (2 * d.c + d.vacancy_sum != target) return false;
  if (d.value.is_zero()) return true;
  const auto stats = shape_stats(d.value);
  return stats.darga && *stats.darga == target;
}

std::vector<KohTerm> koh_terms(int n, int a) {
  if (n < 0 || a < 0) throw DomainError("koh needs n >= 0 and a >= 0");
  std::vector<KohTerm> out;
  for (const auto& lambda : partitions_of(n)) {
    KohTerm t;
    t.lambda = lambda;
    t.Y.push_back(0);
    for (int x : lambda.parts()) t.Y.push_back(t.Y.back() + x);
    auto Y = [&](int j) { return j < static_cast<int>(t.Y.size()) ? t.Y[static_cast<std::size_t>(j)] : n; };
    QPoly prod{1};
    // Factors past the last part have lower index 0; they matter only while
    // the upper index can still be negative.
    for (int j = 1; j <= lambda.length() || j * (a + 2) < 2 * n; ++j) {
      prod *= gauss_binomial(j * (a + 2) - Y(j - 1) - Y(j + 1), lambda[j - 1] - lambda[j]);
      if (prod.is_zero()) break;
    }
    int e = 0;
    for (int x : lambda.parts()) e += x * x - x;
    if (!prod.is_zero()) t.value = shift(prod, e);
    out.push_back(std::move(t));
  }
  return out;
}

QPoly koh_expansion(int n, int a) {
  QPoly acc;
  for (const auto& t : koh_terms(n, a)) acc += t.value;
  return acc;
}

}  // namespace majdist
