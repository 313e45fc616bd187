#include "majdist/recurrences.hpp"

#include <algorithm>

#include "majdist/closed_forms.hpp"
#include "majdist/errors.hpp"

namespace majdist {

namespace {

QPoly sh(const QPoly& p, int s) { return p.is_zero() ? p : shift(p, s); }

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (parts[r] < 0) return false;
    if (r > 0 && parts[r - 1] < parts[r]) return false;
  }
  return true;
}

std::map<std::pair<int, int>, QPoly> split_by(const SkewShape& s,
                                              int (*key)(const StandardTableau&)) {
  std::map<std::pair<int, int>, QPoly> out;
  enumerate_syt(s, [&](const StandardTableau& t) {
    const auto st = statistics(t);
    out[{key(t), st.des}] += QPoly::monomial(st.maj);
  });
  return out;
}

int max_row_key(const StandardTableau& t) { return t.row_of(t.size()) + 1; }

int top_start_key(const StandardTableau& t) { return t.entries().front().front(); }

}  // namespace

const DescentDistribution& OracleCache::get(const SkewShape& s) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = dists_.find(s); it != dists_.end()) return *it->second;
  }
  auto d = std::make_unique<DescentDistribution>(distribution(s, config_));
  std::lock_guard lock(mutex_);
  return *dists_.try_emplace(s, std::move(d)).first->second;
}

QPoly OracleCache::f(const std::vector<int>& parts, int i) {
  if (i < 0 || !is_partition(parts)) return {};
  return get(SkewShape(Partition(parts))).at(i);
}

const std::map<std::pair<int, int>, QPoly>& OracleCache::by_max_row(const Partition& p) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = max_row_.find(p); it != max_row_.end()) return *it->second;
  }
  auto split = std::make_unique<Split>(split_by(SkewShape(p), max_row_key));
  std::lock_guard lock(mutex_);
  return *max_row_.try_emplace(p, std::move(split)).first->second;
}

QPoly OracleCache::f_max_row(const std::vector<int>& parts, int row, int i) {
  if (i < 0 || !is_partition(parts)) return {};
  const auto& split = by_max_row(Partition(parts));
  const auto it = split.find({row, i});
  return it == split.end() ? QPoly{} : it->second;
}

const std::map<std::pair<int, int>, QPoly>& OracleCache::by_top_row_start(const SkewShape& s) {
  if (s.rows() == 0 || s.row_begin(0) == s.row_end(0)) {
    throw DomainError("shape has an empty top row");
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = top_start_.find(s); it != top_start_.end()) return *it->second;
  }
  auto split = std::make_unique<Split>(split_by(s, top_start_key));
  std::lock_guard lock(mutex_);
  return *top_start_.try_emplace(s, std::move(split)).first->second;
}

IdentityCheck fstar_recurrence(int n, int k, int j, int i) {
  IdentityCheck c{"fstar", f_star_unchecked(n, k, j, i), f_star_unchecked(n - 1, k, j, i)};
  for (int l = 1; l < k; ++l) c.rhs += sh(f_star_unchecked(n - 1, k - l, j, i - 1), n - j + k - l);
  return c;
}

std::vector<IdentityCheck> nk2_proof_identities(int n, int k, int i, OracleCache& cache) {
  const int N = n + k + 1;
  auto fr = [&](std::vector<int> p, int row, int d) { return cache.f_max_row(p, row, d); };
  auto fd = [&](std::vector<int> p, int d) { return cache.f(p, d); };
  std::vector<IdentityCheck> out;
  out.push_back({"row1", fr({n, k, 2}, 1, i), fd({n - 1, k, 2}, i)});
  out.push_back({"row2", fr({n, k, 2}, 2, i),
                 sh(fr({n, k - 1, 2}, 1, i - 1), N) + fr({n, k - 1, 2}, 2, i) +
                     fr({n, k - 1, 2}, 3, i)});
  out.push_back({"row3", fr({n, k, 2}, 3, i),
                 sh(fr({n, k, 1}, 1, i - 1) + fr({n, k, 1}, 2, i - 1), N) + fr({n, k, 1}, 3, i)});
  out.push_back({"row3_of_nk1", fr({n, k, 1}, 3, i), sh(fd({n, k}, i - 1), n + k)});
  out.push_back({"combined", fd({n, k, 2}, i),
                 fd({n - 1, k, 2}, i) + sh(fd({n - 1, k - 1, 2}, i - 1), N) + fd({n, k - 1, 2}, i) -
                     fd({n - 1, k - 1, 2}, i) + sh(fd({n, k, 1}, i - 1), N) -
                     sh(fd({n, k}, i - 2), 2 * n + 2 * k + 1) + sh(fd({n, k}, i - 1), n + k)});
  return out;
}

IdentityCheck three_row_recurrence(int l1, int l2, int l3, int i, bool printed, OracleCache& cache) {
  const int N = l1 + l2 + l3;
  IdentityCheck c;
  c.label = printed ? "printed" : "corrected";
  c.lhs = cache.f({l1, l2, l3}, i);
  c.rhs = cache.f({l1 - 1, l2, l3}, i) + sh(cache.f({l1 - 1, l2 - 1, l3}, i - 1), N - 1) +
          cache.f({l1, l2 - 1, l3}, i) - cache.f({l1 - 1, l2 - 1, l3}, i);
  for (int l = 1; l <= l3; ++l) {
    for (unsigned mask = 1; mask < (1u << l); ++mask) {
      if (!printed && !(mask & (1u << (l - 1)))) continue;
      int size = 0, sum = 0;
      for (int b = 0; b < l; ++b) {
        if (mask & (1u << b)) {
          ++size;
          sum += b + 1;
        }
      }
      QPoly term = sh(cache.f({l1, l2, l3 - l}, i - size), size * N - sum);
      if (size % 2 == 1) {
        c.rhs += term;
      } else {
        c.rhs -= term;
      }
    }
  }
  return c;
}

namespace {

void nu_rec(const Partition& lambda, std::size_t r, int prev, std::vector<int>& acc,
            std::vector<std::vector<int>>& out) {
  if (r == static_cast<std::size_t>(lambda.length())) {
    out.push_back(acc);
    return;
  }
  for (int v = 0; v <= std::min(prev, lambda[static_cast<int>(r)]); ++v) {
    acc.push_back(v);
    nu_rec(lambda, r + 1, v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

IdentityCheck first_row_recurrence(const Partition& lambda, int i, OracleCache& cache) {
  if (lambda.empty()) throw DomainError("first-row recurrence needs a nonempty partition");
  const int N = lambda.size();
  std::vector<std::vector<int>> nus;
  std::vector<int> acc{lambda.first()};
  nu_rec(lambda, 1, lambda.first() - 1, acc, nus);
  const std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  IdentityCheck c{"first_row", cache.f(parts, i), {}};
  for (const auto& nu : nus) {
    std::vector<int> rest = nu;
    --rest[0];
    int nu_size = 0;
    for (int v : nu) nu_size += v;
    const int mu_size = N - nu_size;
    if (mu_size == 0) {
      c.rhs += cache.f(rest, i);
      continue;
    }
    const auto& mu = cache.get(SkewShape(lambda, Partition(nu)));
    for (int j = 0; j < i; ++j) {
      const QPoly& fm = mu.at(j);
      if (fm.is_zero()) continue;
      c.rhs += sh(cache.f(rest, i - j - 1) * fm, (j + 1) * (N - mu_size));
    }
  }
  return c;
}

}  // namespace majdist
