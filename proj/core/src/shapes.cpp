#include "majdist/shapes.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "majdist/errors.hpp"
#include "majdist/tableaux.hpp"

namespace majdist {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("not a partition: nonpositive part before a positive one");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("not a partition: parts increase");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> acc;
  partitions_rec(n, max_part, acc, out);
  return out;
}

HookData hook_data(const Partition& p) {
  const Partition conj = conjugate(p);
  HookData data;
  Integer denom = 1;
  for (int i = 0; i < p.length(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < p[i]; ++j) {
      const int h = p[i] - j + conj[j] - i - 1;
      row.push_back(h);
      denom *= h;
    }
    data.hooks.push_back(std::move(row));
  }
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(p.size()));
  data.frt_count = fact / denom;
  return data;
}

Integer frt_count(const Partition& p) { return hook_data(p).frt_count; }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length()) throw DomainError("inner not contained in outer");
  for (int i = 0; i < inner_.length(); ++i) {
    if (inner_[i] > outer_[i]) throw DomainError("inner not contained in outer");
  }
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(cell_count()));
  for (int r = 0; r < rows(); ++r) {
    for (int c = row_begin(r); c < row_end(r); ++c) out.push_back({r, c});
  }
  return out;
}

SkewShape make_skew(const Partition& outer, const Partition& inner) {
  return SkewShape(outer, inner);
}

int max_descents(const SkewShape& s) {
  if (s.is_straight()) return s.outer().size() - s.outer().first();
  static std::mutex mutex;
  static std::map<SkewShape, int> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(s); it != cache.end()) return it->second;
  }
  const DescentDistribution dist = distribution(s);
  const int value = dist.by_descents.empty() ? 0 : dist.by_descents.rbegin()->first;
  std::lock_guard lock(mutex);
  cache.emplace(s, value);
  return value;
}

namespace {

void skew_rec(int budget, int prev_inner, int prev_outer, std::vector<int>& outer,
              std::vector<int>& inner, std::vector<SkewShape>& out) {
  if (!inner.empty() && inner.back() == 0) {
    out.emplace_back(Partition(outer), Partition(inner));
  }
  if (budget == 0 || (!inner.empty() && prev_outer == 0)) return;
  const bool first_row = outer.empty();
  // First row: any start column, bounded by the cell budget since every
  // column to its left must be covered by a lower row.
  const int inner_hi = first_row ? budget - 1 : prev_inner;
  for (int in = 0; in <= inner_hi; ++in) {
    const int lo = std::max(in + 1, first_row ? 1 : prev_inner);
    const int hi = first_row ? budget : std::min(prev_outer, in + budget);
    for (int ou = lo; ou <= hi; ++ou) {
      const int cells = ou - in;
      if (cells > budget) break;
      if (first_row && ou > budget) break;
      outer.push_back(ou);
      inner.push_back(in);
      skew_rec(budget - cells, in, ou, outer, inner, out);
      outer.pop_back();
      inner.pop_back();
    }
  }
}

}  // namespace

std::vector<SkewShape> normalized_skew_shapes(int max_cells) {
  std::vector<SkewShape> out;
  if (max_cells <= 0) return out;
  std::vector<int> outer, inner;
  skew_rec(max_cells, 0, 0, outer, inner, out);
  std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
    if (a.cell_count() != b.cell_count()) return a.cell_count() < b.cell_count();
    return a < b;
  });
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
      throw DomainError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

SkewShape parse_shape(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (int part : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
  }
  return out;
}

std::string format_shape(const SkewShape& s) {
  std::string out = format_partition(s.outer());
  if (!s.is_straight()) out += "/" + format_partition(s.inner());
  return out;
}

}  // namespace majdist
