#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library's enumerators, so agreement is independent evidence.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/shapes.hpp"

namespace brute {

using majdist::QPoly;

struct BoxCell {
  int row, col;
};

inline std::vector<BoxCell> cells_of(const majdist::SkewShape& s) {
  std::vector<BoxCell> out;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = s.row_begin(r); c < s.row_end(r); ++c) out.push_back({r, c});
  }
  return out;
}

inline QPoly from_counts(const std::map<int, long>& m) {
  QPoly p;
  for (const auto& [e, c] : m) p += QPoly::monomial(e, c);
  return p;
}

// des -> q^maj polynomial, by trying every assignment of 1..N to the cells.
inline std::map<int, QPoly> syt_distribution(const majdist::SkewShape& s) {
  const auto cells = cells_of(s);
  const int n = static_cast<int>(cells.size());
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::map<int, std::map<int, long>> counts;
  std::map<std::pair<int, int>, int> grid;
  do {
    grid.clear();
    for (int x = 0; x < n; ++x) grid[{cells[x].row, cells[x].col}] = values[x];
    bool ok = true;
    for (const auto& [rc, v] : grid) {
      auto right = grid.find({rc.first, rc.second + 1});
      auto below = grid.find({rc.first + 1, rc.second});
      if ((right != grid.end() && right->second < v) || (below != grid.end() && below->second < v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> row_of(static_cast<std::size_t>(n + 1));
    for (const auto& [rc, v] : grid) row_of[static_cast<std::size_t>(v)] = rc.first;
    int des = 0, maj = 0;
    for (int v = 1; v < n; ++v) {
      if (row_of[static_cast<std::size_t>(v + 1)] > row_of[static_cast<std::size_t>(v)]) {
        ++des;
        maj += v;
      }
    }
    ++counts[des][maj];
  } while (std::next_permutation(values.begin(), values.end()));
  std::map<int, QPoly> out;
  for (const auto& [d, m] : counts) out[d] = from_counts(m);
  return out;
}

// Sum of q^(entry - 1) over every filling with entries 1..m, checked for
// weak rows and strict columns.
inline QPoly ssyt(const majdist::SkewShape& s, int m) {
  const auto cells = cells_of(s);
  const std::size_t n = cells.size();
  std::vector<int> entry(n, 1);
  std::map<int, long> counts;
  if (m < 1) return n == 0 ? QPoly{1} : QPoly{};
  while (true) {
    std::map<std::pair<int, int>, int> grid;
    int weight = 0;
    for (std::size_t x = 0; x < n; ++x) {
      grid[{cells[x].row, cells[x].col}] = entry[x];
      weight += entry[x] - 1;
    }
    bool ok = true;
    for (const auto& [rc, v] : grid) {
      auto right = grid.find({rc.first, rc.second + 1});
      auto below = grid.find({rc.first + 1, rc.second});
      if ((right != grid.end() && right->second < v) || (below != grid.end() && below->second <= v)) {
        ok = false;
        break;
      }
    }
    if (ok) ++counts[weight];
    std::size_t x = 0;
    while (x < n && entry[x] == m) entry[x++] = 1;
    if (x == n) break;
    ++entry[x];
  }
  return from_counts(counts);
}

// [M choose N]_q as the inversion count over 0/1 words with N ones.
inline QPoly gauss(int M, int N) {
  if (N < 0 || M < 0 || N > M) return {};
  std::map<int, long> counts;
  for (unsigned mask = 0; mask < (1u << M); ++mask) {
    if (__builtin_popcount(mask) != N) continue;
    int inv = 0, ones = 0;
    for (int b = 0; b < M; ++b) {
      if (mask >> b & 1u) {
        ++ones;
      } else {
        inv += ones;
      }
    }
    ++counts[inv];
  }
  return from_counts(counts);
}

inline bool avoids_321(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (w[a] > w[b] && w[b] > w[c]) return false;
      }
    }
  }
  return true;
}

// k -> sum over 321-avoiders of length n with k descents of q^maj.
inline std::map<int, QPoly> a_polynomials(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::map<int, std::map<int, long>> counts;
  do {
    if (!avoids_321(w)) continue;
    int des = 0, maj = 0;
    for (int p = 1; p < n; ++p) {
      if (w[static_cast<std::size_t>(p - 1)] > w[static_cast<std::size_t>(p)]) {
        ++des;
        maj += p;
      }
    }
    ++counts[des][maj];
  } while (std::next_permutation(w.begin(), w.end()));
  std::map<int, QPoly> out;
  for (const auto& [d, m] : counts) out[d] = from_counts(m);
  return out;
}

inline QPoly at(const std::map<int, QPoly>& m, int i) {
  auto it = m.find(i);
  return it == m.end() ? QPoly{} : it->second;
}

}  // namespace brute
