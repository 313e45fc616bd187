#include <doctest.h>

#include "majdist/errors.hpp"
#include "majdist/shapes.hpp"
#include "majdist/tableaux.hpp"

using namespace majdist;

TEST_SUITE("shapes") {

TEST_CASE("partition invariants") {
  const Partition p({5, 3, 3, 1, 0, 0});
  CHECK(p.length() == 4);
  CHECK(p.size() == 12);
  CHECK(p[0] == 5);
  CHECK(p[9] == 0);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({3, -1}), DomainError);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({5, 3, 3, 1})) == Partition({4, 3, 3, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({4})) == Partition({1, 1, 1, 1}));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(-1).empty());
  CHECK(partitions_of(6, 2).size() == 4);
}

TEST_CASE("hooks and frame-robinson-thrall counts") {
  auto h = hook_data(Partition({2, 2}));
  CHECK(h.hooks == std::vector<std::vector<int>>{{3, 2}, {2, 1}});
  CHECK(h.frt_count == 2);
  h = hook_data(Partition({2, 1}));
  CHECK(h.hooks == std::vector<std::vector<int>>{{3, 1}, {1}});
  CHECK(h.frt_count == 2);
  CHECK(frt_count(Partition({5})) == 1);
  CHECK(frt_count(Partition({3, 3, 3})) == 42);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : partitions_of(n)) {
      long count = 0;
      enumerate_syt(SkewShape(p), [&](const StandardTableau&) { ++count; });
      CHECK(frt_count(p) == count);
    }
  }
}

TEST_CASE("skew shapes") {
  const SkewShape s(Partition({5, 3, 3, 1}), Partition({3, 1}));
  CHECK(s.cell_count() == 8);
  CHECK_FALSE(s.is_straight());
  CHECK(SkewShape(Partition({2, 2})).cell_count() == 4);
  CHECK(SkewShape(Partition({2, 2})).is_straight());
  CHECK_THROWS_WITH_AS(SkewShape(Partition({2, 2}), Partition({3})),
                       doctest::Contains("inner not contained in outer"), DomainError);
  CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({1, 1})), DomainError);
  CHECK(s.cells().front() == Cell{0, 3});
  CHECK(s.cells().size() == 8);
}

TEST_CASE("maximum descents") {
  CHECK(max_descents(SkewShape(Partition({3, 2, 1}))) == 3);
  CHECK(max_descents(SkewShape(Partition({6}))) == 0);
  CHECK(max_descents(SkewShape(Partition({2, 2}), Partition({1}))) == 1);
}

TEST_CASE("normalized skew shape enumeration") {
  CHECK(normalized_skew_shapes(1).size() == 1);
  CHECK(normalized_skew_shapes(8).size() == 3909);
  for (const auto& s : normalized_skew_shapes(6)) {
    CHECK(s.cell_count() >= 1);
    CHECK(s.cell_count() <= 6);
    for (int r = 0; r < s.rows(); ++r) CHECK(s.row_end(r) > s.row_begin(r));
    CHECK(s.inner()[s.rows() - 1] == 0);
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_partition("5,3,3,1") == Partition({5, 3, 3, 1}));
  CHECK(parse_partition("").empty());
  CHECK(parse_partition("0").empty());
  const SkewShape s = parse_shape("3,2,1,1/1");
  CHECK(s.outer() == Partition({3, 2, 1, 1}));
  CHECK(s.inner() == Partition({1}));
  CHECK(format_shape(s) == "3,2,1,1/1");
  CHECK(format_partition(Partition({4, 2})) == "4,2");
  CHECK_THROWS_AS(parse_partition("3,x"), DomainError);
  CHECK_THROWS_AS(parse_partition("1,2"), DomainError);
  CHECK_THROWS_AS(parse_shape("2,2/3"), DomainError);
}

}  // TEST_SUITE
