#include "majdist/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "majdist/closed_forms.hpp"
#include "majdist/errors.hpp"
#include "majdist/parallel.hpp"

namespace majdist {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

DescentStats perm_statistics(const std::vector<int>& word) {
  DescentStats s;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) {
      s.descent_set.push_back(static_cast<int>(i) + 1);
      s.maj += static_cast<int>(i) + 1;
    }
  }
  s.des = static_cast<int>(s.descent_set.size());
  return s;
}

DescentStats perm_statistics(const Permutation& p) { return perm_statistics(p.word()); }

int longest_decreasing_subsequence(const std::vector<int>& word) {
  // Patience sorting on negated values.
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), -v);
    if (it == tails.end()) {
      tails.push_back(-v);
    } else {
      *it = -v;
    }
  }
  return static_cast<int>(tails.size());
}

bool avoids_321(const std::vector<int>& word) {
  // A word avoids 321 iff it splits into two increasing subsequences:
  // left-to-right maxima, and the rest.
  int max_seen = 0;
  int rest_last = 0;
  for (int v : word) {
    if (v > max_seen) {
      max_seen = v;
    } else {
      if (v < rest_last) return false;
      rest_last = v;
    }
  }
  return true;
}

bool avoids_321(const Permutation& p) { return avoids_321(p.word()); }

RskPair rsk(const Permutation& p) {
  std::vector<std::vector<int>> P, Q;
  int step = 0;
  for (int x : p.word()) {
    ++step;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({step});
        break;
      }
      auto& row = P[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        Q[r].push_back(step);
        break;
      }
      std::swap(x, *it);
    }
  }
  std::vector<int> parts;
  for (const auto& row : P) parts.push_back(static_cast<int>(row.size()));
  SkewShape shape{Partition(parts)};
  return {StandardTableau(shape, std::move(P)), StandardTableau(shape, std::move(Q))};
}

namespace {

using DesMajCounts = std::vector<std::vector<unsigned long long>>;

void accumulate_prefix(int n, int first, DesMajCounts& counts) {
  std::vector<int> word(static_cast<std::size_t>(n));
  word[0] = first;
  int fill = 1;
  for (int v = 1; v <= n; ++v) {
    if (v != first) word[static_cast<std::size_t>(fill++)] = v;
  }
  do {
    if (!avoids_321(word)) continue;
    int des = 0, maj = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (word[static_cast<std::size_t>(i)] > word[static_cast<std::size_t>(i + 1)]) {
        ++des;
        maj += i + 1;
      }
    }
    if (counts.size() <= static_cast<std::size_t>(des)) counts.resize(static_cast<std::size_t>(des) + 1);
    auto& row = counts[static_cast<std::size_t>(des)];
    if (row.size() <= static_cast<std::size_t>(maj)) row.resize(static_cast<std::size_t>(maj) + 1, 0);
    ++row[static_cast<std::size_t>(maj)];
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

}  // namespace

std::map<int, QPoly> a_polynomials_direct(int n, const APolynomialConfig& config) {
  if (n < 1) throw DomainError("a_polynomials needs n >= 1");
  if (n > config.permutation_limit) {
    throw LimitExceeded("permutation limit: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(config.permutation_limit));
  }
  // One shard per first letter; shards merge by addition.
  auto shards = parallel_map(static_cast<std::size_t>(n), config.jobs, [n](std::size_t i) {
    DesMajCounts counts;
    accumulate_prefix(n, static_cast<int>(i) + 1, counts);
    return counts;
  });
  std::map<int, QPoly> out;
  for (const auto& shard : shards) {
    for (std::size_t des = 0; des < shard.size(); ++des) {
      std::vector<Integer> coeffs(shard[des].size());
      for (std::size_t e = 0; e < coeffs.size(); ++e) {
        mpz_set_ui(coeffs[e].get_mpz_t(), static_cast<unsigned long>(shard[des][e]));
      }
      QPoly p(std::move(coeffs));
      if (!p.is_zero()) out[static_cast<int>(des)] += p;
    }
  }
  return out;
}

std::map<int, QPoly> a_polynomials_via_tableaux(int n) {
  if (n < 1) throw DomainError("a_polynomials needs n >= 1");
  std::map<int, QPoly> out;
  for (int i = 0; i <= n / 2; ++i) {
    QPoly acc;
    for (int k = i; k <= n / 2; ++k) {
      const Integer g = frt_count(Partition({n - k, k}));
      acc += QPoly::constant(g) * f_two_row(n - k, k, i);
    }
    if (!acc.is_zero()) out[i] = acc;
  }
  return out;
}

std::map<int, QPoly> a_polynomials(int n, const APolynomialConfig& config) {
  auto direct = a_polynomials_direct(n, config);
  if (direct != a_polynomials_via_tableaux(n)) {
    throw InternalError("RSK decomposition violation at n = " + std::to_string(n));
  }
  return direct;
}

}  // namespace majdist
