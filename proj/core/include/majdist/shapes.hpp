#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "majdist/qpoly.hpp"

namespace majdist {

/// Integer partition, stored without trailing zeros. Parts are weakly
/// decreasing and positive; zero padding is accepted on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }
  // Part i (0-based); zero past the last part.
  int operator[](int i) const {
    return i < length() && i >= 0 ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int first() const { return (*this)[0]; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& p);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
// Partitions of n with every part <= max_part.
std::vector<Partition> partitions_of(int n, int max_part);

struct HookData {
  // hooks[i][j]: hook length of the cell in row i, column j (0-based).
  std::vector<std::vector<int>> hooks;
  Integer frt_count;
};

HookData hook_data(const Partition& p);
Integer frt_count(const Partition& p);

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// outer \ inner. Stored un-normalized: empty leading rows or columns are kept
/// as given. A straight shape has an empty inner partition.
class SkewShape {
 public:
  SkewShape() = default;
  // Throws DomainError("inner not contained in outer").
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int cell_count() const { return outer_.size() - inner_.size(); }
  bool is_straight() const { return inner_.empty(); }
  // Half-open column range [row_begin(r), row_end(r)) of row r.
  int row_begin(int r) const { return inner_[r]; }
  int row_end(int r) const { return outer_[r]; }
  // Cells in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    return a.inner_ <=> b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
};

SkewShape make_skew(const Partition& outer, const Partition& inner);

// Largest descent count over SYT of the shape. |lambda| - lambda_1 for
// straight shapes; skew shapes consult the tableau oracle (memoized).
int max_descents(const SkewShape& s);

// Skew shapes with between 1 and max_cells cells having no empty row and no
// empty column. Deleting an empty row or column does not change SYT or SSYT
// statistics, so this is every skew shape up to that normalization.
std::vector<SkewShape> normalized_skew_shapes(int max_cells);

// "5,3,3,1" -> (5,3,3,1); "" or "0" -> the empty partition.
Partition parse_partition(std::string_view text);
// "5,3,3,1/3,1" -> (5,3,3,1) \ (3,1). Throws DomainError on bad syntax or
// containment failure.
SkewShape parse_shape(std::string_view text);

std::string format_partition(const Partition& p);
std::string format_shape(const SkewShape& s);

}  // namespace majdist
