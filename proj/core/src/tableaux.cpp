#include "majdist/tableaux.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "majdist/errors.hpp"

namespace majdist {

StandardTableau::StandardTableau(SkewShape shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const int n = shape_.cell_count();
  if (static_cast<int>(entries_.size()) != shape_.rows()) {
    throw DomainError("tableau row count does not match its shape");
  }
  row_of_.assign(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = entries_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != shape_.row_end(r) - shape_.row_begin(r)) {
      throw DomainError("tableau row length does not match its shape");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v - 1)] != -1) {
        throw DomainError("tableau entries are not a bijection with 1..n");
      }
      row_of_[static_cast<std::size_t>(v - 1)] = r;
      if (c > 0 && row[c - 1] >= v) throw DomainError("tableau row does not increase");
    }
  }
  for (int r = 1; r < shape_.rows(); ++r) {
    const auto& above = entries_[static_cast<std::size_t>(r - 1)];
    const auto& row = entries_[static_cast<std::size_t>(r)];
    for (int col = shape_.row_begin(r); col < shape_.row_end(r); ++col) {
      if (col < shape_.row_begin(r - 1)) continue;
      const int up = above[static_cast<std::size_t>(col - shape_.row_begin(r - 1))];
      const int here = row[static_cast<std::size_t>(col - shape_.row_begin(r))];
      if (up >= here) throw DomainError("tableau column does not increase");
    }
  }
}

DescentStats statistics(const StandardTableau& t) {
  DescentStats s;
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i) < t.row_of(i + 1)) {
      s.descent_set.push_back(i);
      s.maj += i;
    }
  }
  s.des = static_cast<int>(s.descent_set.size());
  return s;
}

namespace {

// Cell (r, fill[r]) can take the next value when the cell above it is
// already filled or lies outside the shape.
bool addable(const SkewShape& s, const std::vector<int>& fill, int r) {
  if (fill[static_cast<std::size_t>(r)] >= s.row_end(r)) return false;
  return r == 0 || fill[static_cast<std::size_t>(r - 1)] > fill[static_cast<std::size_t>(r)];
}

void enumerate_rec(const SkewShape& s, std::vector<int>& fill,
                   std::vector<std::vector<int>>& entries, int next, int n,
                   const std::function<void(const StandardTableau&)>& visit) {
  if (next > n) {
    visit(StandardTableau(s, entries));
    return;
  }
  for (int r = 0; r < s.rows(); ++r) {
    if (!addable(s, fill, r)) continue;
    ++fill[static_cast<std::size_t>(r)];
    entries[static_cast<std::size_t>(r)].push_back(next);
    enumerate_rec(s, fill, entries, next + 1, n, visit);
    entries[static_cast<std::size_t>(r)].pop_back();
    --fill[static_cast<std::size_t>(r)];
  }
}

// Descent-indexed polynomials; index = number of descents.
using ByDescents = std::vector<QPoly>;

// Machine-word counts used inside the placement oracle, stored as a dense
// des x maj rectangle starting at maj_lo. Every count is at most n!, which
// fits below 2^64 for n <= 20.
struct Counts {
  int des = 0;  // rows: descent counts 0..des-1
  int maj_lo = 0;
  int width = 0;
  std::vector<std::uint64_t> data;

  std::uint64_t& at(int d, int m) { return data[static_cast<std::size_t>(d * width + m - maj_lo)]; }
  std::uint64_t at(int d, int m) const { return data[static_cast<std::size_t>(d * width + m - maj_lo)]; }
};

// Sum of the children of one node, each with its descent and maj shift.
struct Child {
  const Counts* counts;
  int extra_des;
  int maj_shift;
};

Counts combine(const std::vector<Child>& children) {
  int des = 0;
  int lo = 0;
  int hi = -1;
  for (const Child& c : children) {
    if (c.counts->width == 0) continue;
    des = std::max(des, c.counts->des + c.extra_des);
    const int clo = c.counts->maj_lo + c.maj_shift;
    const int chi = clo + c.counts->width - 1;
    if (hi < lo) {
      lo = clo;
      hi = chi;
    } else {
      lo = std::min(lo, clo);
      hi = std::max(hi, chi);
    }
  }
  Counts out;
  if (hi < lo) return out;
  out.des = des;
  out.maj_lo = lo;
  out.width = hi - lo + 1;
  out.data.assign(static_cast<std::size_t>(des * out.width), 0);
  for (const Child& c : children) {
    const Counts& src = *c.counts;
    for (int d = 0; d < src.des; ++d) {
      for (int m = src.maj_lo; m < src.maj_lo + src.width; ++m) {
        std::uint64_t& dst = out.at(d + c.extra_des, m + c.maj_shift);
        if (__builtin_add_overflow(dst, src.at(d, m), &dst)) {
          throw LimitExceeded("oracle count overflow");
        }
      }
    }
  }
  return out;
}

ByDescents to_polys(const Counts& c) {
  ByDescents out(static_cast<std::size_t>(c.des));
  for (int d = 0; d < c.des; ++d) {
    std::vector<Integer> coeffs(static_cast<std::size_t>(c.maj_lo + c.width));
    for (int m = c.maj_lo; m < c.maj_lo + c.width; ++m) {
      const std::uint64_t v = c.at(d, m);
      mpz_import(coeffs[static_cast<std::size_t>(m)].get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    }
    out[static_cast<std::size_t>(d)] = QPoly(std::move(coeffs));
  }
  return out;
}

// Memoized form of the enumerate_syt placement tree. The subtree below a
// node depends only on the filled cells and the row of the last value.
class PlacementOracle {
 public:
  explicit PlacementOracle(const SkewShape& s) : shape_(s), n_(s.cell_count()) {}

  ByDescents run() {
    if (n_ > 20) throw LimitExceeded("oracle size limit: counts need more than 64 bits");
    std::vector<int> fill;
    for (int r = 0; r < shape_.rows(); ++r) fill.push_back(shape_.row_begin(r));
    return to_polys(solve(fill, -1, 0, 0));
  }

 private:
  // key is the mixed-radix code of the filled prefix of each row; the
  // last row is folded in here.
  const Counts& solve(std::vector<int>& fill, int last_row, int placed, std::uint64_t fill_code) {
    const std::uint64_t key = fill_code * static_cast<std::uint64_t>(shape_.rows() + 1) +
                              static_cast<std::uint64_t>(last_row + 1);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Counts out;
    if (placed == n_) {
      out.des = 1;
      out.width = 1;
      out.data = {1};
    } else {
      std::vector<Child> children;
      std::uint64_t stride = 1;
      for (int r = shape_.rows() - 1; r >= 0; --r) {
        const int len = shape_.row_end(r) - shape_.row_begin(r);
        if (addable(shape_, fill, r)) {
          // Placing value placed+1 below the row of value placed is a
          // descent at position placed.
          const bool descent = last_row >= 0 && r > last_row;
          ++fill[static_cast<std::size_t>(r)];
          const Counts& sub = solve(fill, r, placed + 1, fill_code + stride);
          --fill[static_cast<std::size_t>(r)];
          children.push_back({&sub, descent ? 1 : 0, descent ? placed : 0});
        }
        stride *= static_cast<std::uint64_t>(len + 1);
      }
      out = combine(children);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  const SkewShape& shape_;
  int n_;
  // Node-based, so references into it stay valid across inserts.
  std::unordered_map<std::uint64_t, Counts> memo_;
};

DescentDistribution from_by_descents(const SkewShape& s, const ByDescents& v) {
  DescentDistribution d;
  d.shape = s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    d.by_descents.emplace(static_cast<int>(i), v[i]);
    d.total += v[i];
  }
  return d;
}

}  // namespace

void enumerate_syt(const SkewShape& s, const std::function<void(const StandardTableau&)>& visit) {
  std::vector<int> fill;
  for (int r = 0; r < s.rows(); ++r) fill.push_back(s.row_begin(r));
  std::vector<std::vector<int>> entries(static_cast<std::size_t>(s.rows()));
  enumerate_rec(s, fill, entries, 1, s.cell_count(), visit);
}

const QPoly& DescentDistribution::at(int i) const {
  static const QPoly zero;
  auto it = by_descents.find(i);
  return it == by_descents.end() ? zero : it->second;
}

DescentDistribution& DescentDistribution::merge(const DescentDistribution& other) {
  for (const auto& [i, p] : other.by_descents) {
    auto& slot = by_descents[i];
    slot += p;
    if (slot.is_zero()) by_descents.erase(i);
  }
  total += other.total;
  return *this;
}

DescentDistribution distribution(const SkewShape& s, const OracleConfig& config) {
  const int n = s.cell_count();
  if (n > config.cell_limit) {
    if (s.rows() <= 2 && n <= config.two_row_limit) return two_row_distribution(s);
    throw LimitExceeded("oracle size limit: " + std::to_string(n) + " cells exceeds " +
                        std::to_string(config.cell_limit));
  }
  return from_by_descents(s, PlacementOracle(s).run());
}

DescentDistribution distribution_by_enumeration(const SkewShape& s) {
  ByDescents acc;
  enumerate_syt(s, [&](const StandardTableau& t) {
    const DescentStats st = statistics(t);
    if (acc.size() <= static_cast<std::size_t>(st.des)) acc.resize(static_cast<std::size_t>(st.des) + 1);
    acc[static_cast<std::size_t>(st.des)] += QPoly::monomial(st.maj);
  });
  return from_by_descents(s, acc);
}

DescentDistribution two_row_distribution(const SkewShape& s) {
  if (s.rows() > 2) throw DomainError("two_row_distribution needs at most two rows");
  const int n = s.cell_count();
  const int top_len = s.rows() > 0 ? s.row_end(0) - s.row_begin(0) : 0;
  const int bottom_begin = s.rows() > 1 ? s.row_begin(1) : 0;
  const int bottom_len = s.rows() > 1 ? s.row_end(1) - bottom_begin : 0;
  const int top_begin = s.rows() > 0 ? s.row_begin(0) : 0;

  // counts[des][maj], filled by walking every top/bottom choice sequence.
  std::vector<std::vector<unsigned long long>> counts;
  auto bump = [&](int des, int maj) {
    if (counts.size() <= static_cast<std::size_t>(des)) counts.resize(static_cast<std::size_t>(des) + 1);
    auto& row = counts[static_cast<std::size_t>(des)];
    if (row.size() <= static_cast<std::size_t>(maj)) row.resize(static_cast<std::size_t>(maj) + 1, 0);
    ++row[static_cast<std::size_t>(maj)];
  };
  // Iterative DFS; the choice at each step is "top" or "bottom".
  struct Frame {
    int top, bottom, last, des, maj;
  };
  std::vector<Frame> stack{{0, 0, -1, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const int placed = f.top + f.bottom;
    if (placed == n) {
      bump(f.des, f.maj);
      continue;
    }
    if (f.top < top_len) stack.push_back({f.top + 1, f.bottom, 0, f.des, f.maj});
    // Bottom cell at column bottom_begin + bottom needs the cell above filled
    // or absent.
    const int col = bottom_begin + f.bottom;
    if (f.bottom < bottom_len && (col < top_begin || col < top_begin + f.top)) {
      const bool descent = f.last == 0;
      stack.push_back({f.top, f.bottom + 1, 1, f.des + (descent ? 1 : 0),
                       f.maj + (descent ? placed : 0)});
    }
  }
  ByDescents v(counts.size());
  for (std::size_t d = 0; d < counts.size(); ++d) {
    std::vector<Integer> coeffs(counts[d].size());
    for (std::size_t e = 0; e < counts[d].size(); ++e) {
      mpz_set_ui(coeffs[e].get_mpz_t(), static_cast<unsigned long>(counts[d][e]));
    }
    v[d] = QPoly(std::move(coeffs));
  }
  return from_by_descents(s, v);
}

namespace {

// Chains inner = nu^0 <= nu^1 <= ... <= nu^m = outer of horizontal strips;
// the strip added at step t holds the entries equal to t.
class StripChain {
 public:
  StripChain(const SkewShape& s, int m) : shape_(s), m_(m) {}

  QPoly run() {
    std::vector<int> nu;
    for (int r = 0; r < shape_.rows(); ++r) nu.push_back(shape_.row_begin(r));
    return solve(1, nu);
  }

 private:
  QPoly solve(int t, const std::vector<int>& nu) {
    bool full = true;
    for (int r = 0; r < shape_.rows(); ++r) full = full && nu[static_cast<std::size_t>(r)] == shape_.row_end(r);
    if (full) return QPoly{1};
    if (t > m_) return {};

    std::string key(nu.size() + 1, '\0');
    for (std::size_t r = 0; r < nu.size(); ++r) key[r] = static_cast<char>(nu[r]);
    key.back() = static_cast<char>(t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    QPoly acc;
    std::vector<int> next = nu;
    strips(t, nu, next, 0, 0, acc);
    memo_.emplace(std::move(key), acc);
    return acc;
  }

  void strips(int t, const std::vector<int>& nu, std::vector<int>& next, int r, int added,
              QPoly& acc) {
    if (r == shape_.rows()) {
      QPoly rest = solve(t + 1, next);
      if (!rest.is_zero()) acc += shift(rest, (t - 1) * added);
      return;
    }
    const int lo = nu[static_cast<std::size_t>(r)];
    int hi = shape_.row_end(r);
    if (r > 0) hi = std::min(hi, nu[static_cast<std::size_t>(r - 1)]);
    for (int v = lo; v <= std::max(lo, hi); ++v) {
      next[static_cast<std::size_t>(r)] = v;
      strips(t, nu, next, r + 1, added + (v - lo), acc);
    }
    next[static_cast<std::size_t>(r)] = lo;
  }

  const SkewShape& shape_;
  int m_;
  std::unordered_map<std::string, QPoly> memo_;
};

void ssyt_backtrack(const std::vector<Cell>& cells, std::size_t idx, int m, int weight,
                    std::map<std::pair<int, int>, int>& fill, std::vector<unsigned long long>& counts) {
  if (idx == cells.size()) {
    if (counts.size() <= static_cast<std::size_t>(weight)) counts.resize(static_cast<std::size_t>(weight) + 1, 0);
    ++counts[static_cast<std::size_t>(weight)];
    return;
  }
  const Cell c = cells[idx];
  int lo = 0;
  if (auto it = fill.find({c.row, c.col - 1}); it != fill.end()) lo = std::max(lo, it->second);
  if (auto it = fill.find({c.row - 1, c.col}); it != fill.end()) lo = std::max(lo, it->second + 1);
  for (int v = lo; v < m; ++v) {
    fill[{c.row, c.col}] = v;
    ssyt_backtrack(cells, idx + 1, m, weight + v, fill, counts);
  }
  fill.erase({c.row, c.col});
}

}  // namespace

QPoly ssyt_principal_spec(const SkewShape& s, int m) {
  if (m < 1) throw DomainError("ssyt_principal_spec needs at least one variable");
  return StripChain(s, m).run();
}

QPoly ssyt_principal_spec_backtrack(const SkewShape& s, int m) {
  if (m < 1) throw DomainError("ssyt_principal_spec needs at least one variable");
  std::map<std::pair<int, int>, int> fill;
  std::vector<unsigned long long> counts;
  ssyt_backtrack(s.cells(), 0, m, 0, fill, counts);
  std::vector<Integer> coeffs(counts.size());
  for (std::size_t e = 0; e < counts.size(); ++e) {
    mpz_set_ui(coeffs[e].get_mpz_t(), static_cast<unsigned long>(counts[e]));
  }
  return QPoly(std::move(coeffs));
}

}  // namespace majdist
