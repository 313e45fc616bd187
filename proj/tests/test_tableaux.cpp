#include <doctest.h>

#include "majdist/errors.hpp"
#include "majdist/tableaux.hpp"
#include "support/brute.hpp"

using namespace majdist;

namespace {

SkewShape sk(std::vector<int> outer, std::vector<int> inner = {}) {
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

std::map<int, QPoly> as_map(const DescentDistribution& d) { return {d.by_descents.begin(), d.by_descents.end()}; }

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("enumeration of small shapes") {
  std::vector<StandardTableau> seen;
  enumerate_syt(sk({2, 2}), [&](const StandardTableau& t) { seen.push_back(t); });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0].entries() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(seen[1].entries() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  int count = 0;
  enumerate_syt(sk({7}), [&](const StandardTableau&) { ++count; });
  CHECK(count == 1);
  count = 0;
  enumerate_syt(sk({2, 2}, {1}), [&](const StandardTableau&) { ++count; });
  CHECK(count == 2);
  count = 0;
  enumerate_syt(sk({}), [&](const StandardTableau& t) { count += 1 + t.size(); });
  CHECK(count == 1);
}

TEST_CASE("standardness is validated") {
  CHECK_THROWS_AS(StandardTableau(sk({2, 2}), {{1, 3}, {4, 2}}), DomainError);
  CHECK_THROWS_AS(StandardTableau(sk({2, 2}), {{1, 2}, {3}}), DomainError);
  CHECK_THROWS_AS(StandardTableau(sk({2, 1}), {{1, 1}, {3}}), DomainError);
}

TEST_CASE("statistics of frozen tableaux") {
  const StandardTableau fig(sk({5, 3, 3, 1}), {{1, 2, 5, 6, 11}, {3, 4, 8}, {7, 9, 12}, {10}});
  auto st = statistics(fig);
  CHECK(st.des == 5);
  CHECK(st.maj == 36);

  const StandardTableau ex(sk({4, 3, 1, 1}), {{1, 2, 5, 7}, {3, 6, 8}, {4}, {9}});
  st = statistics(ex);
  CHECK(st.descent_set == std::vector<int>{2, 3, 5, 7, 8});
  CHECK(st.des == 5);
  CHECK(st.maj == 25);

  st = statistics(StandardTableau(sk({4}), {{1, 2, 3, 4}}));
  CHECK(st.descent_set.empty());
  CHECK(st.des == 0);
  CHECK(st.maj == 0);
}

TEST_CASE("distribution examples") {
  auto d = distribution(sk({2, 2}));
  CHECK(as_map(d) == std::map<int, QPoly>{{1, QPoly::monomial(2)}, {2, QPoly::monomial(4)}});
  CHECK(d.total == QPoly{0, 0, 1, 0, 1});
  CHECK(d.at(0).is_zero());
  d = distribution(sk({2, 1}));
  CHECK(as_map(d) == std::map<int, QPoly>{{1, QPoly{0, 1, 1}}});
  d = distribution(sk({2, 2}, {1}));
  CHECK(as_map(d) == std::map<int, QPoly>{{1, QPoly{0, 1, 1}}});
  d = distribution(sk({3}));
  CHECK(as_map(d) == std::map<int, QPoly>{{0, QPoly{1}}});
}

TEST_CASE("oracle agrees with brute force on every small skew shape") {
  for (const auto& s : normalized_skew_shapes(7)) {
    CAPTURE(format_shape(s));
    CHECK(as_map(distribution(s)) == brute::syt_distribution(s));
  }
  // Un-normalized input is accepted as given.
  CHECK(as_map(distribution(sk({4, 4, 2}, {2, 2}))) == brute::syt_distribution(sk({4, 4, 2}, {2, 2})));
}

TEST_CASE("memoized oracle agrees with tableau-by-tableau accumulation") {
  for (const auto& s : normalized_skew_shapes(9)) {
    if (s.cell_count() < 8) continue;
    CAPTURE(format_shape(s));
    CHECK(as_map(distribution(s)) == as_map(distribution_by_enumeration(s)));
  }
  for (int n = 10; n <= 11; ++n) {
    for (const auto& p : partitions_of(n)) {
      CAPTURE(format_partition(p));
      CHECK(as_map(distribution(SkewShape(p))) == as_map(distribution_by_enumeration(SkewShape(p))));
    }
  }
}

TEST_CASE("two-row lattice walk") {
  for (int n = 1; n <= 14; ++n) {
    for (int k = 0; k <= n && n + k <= 16; ++k) {
      for (int j = 0; j <= k; ++j) {
        const SkewShape s = sk({n, k}, {j});
        CAPTURE(format_shape(s));
        CHECK(as_map(two_row_distribution(s)) == as_map(distribution(s)));
      }
    }
  }
  CHECK_THROWS_AS(two_row_distribution(sk({2, 1, 1})), DomainError);
}

TEST_CASE("size limits") {
  OracleConfig tight{6, 10};
  CHECK_THROWS_WITH_AS(distribution(sk({3, 3, 1}), tight), doctest::Contains("oracle size limit"),
                       LimitExceeded);
  // Two-row shapes past the cell limit fall through to the lattice walk.
  CHECK(distribution(sk({5, 4}), tight).total.at_one() == frt_count(Partition({5, 4})));
  CHECK_THROWS_AS(distribution(sk({6, 5}), tight), LimitExceeded);
  CHECK(distribution(sk({12, 12})).total.at_one() == frt_count(Partition({12, 12})));
}

TEST_CASE("merge is the shardwise sum") {
  const auto a = distribution(sk({3, 2}));
  const auto b = distribution(sk({4, 1}));
  DescentDistribution m = a;
  m.merge(b);
  DescentDistribution n = b;
  n.merge(a);
  CHECK(m.total == a.total + b.total);
  CHECK(m.by_descents == n.by_descents);
  CHECK(m.at(1) == a.at(1) + b.at(1));
}

TEST_CASE("principal specialization examples") {
  CHECK(ssyt_principal_spec(sk({1, 1}), 2) == QPoly{0, 1});
  CHECK(ssyt_principal_spec(sk({1}), 3) == QPoly{1, 1, 1});
  CHECK(ssyt_principal_spec(sk({2, 1}), 3) == QPoly{0, 1, 2, 2, 2, 1});
  CHECK(ssyt_principal_spec(sk({}), 4) == QPoly{1});
  CHECK(ssyt_principal_spec(sk({1, 1, 1}), 2).is_zero());
}

TEST_CASE("strip-chain SSYT count agrees with backtracking and brute force") {
  for (const auto& s : normalized_skew_shapes(5)) {
    for (int m = 1; m <= 4; ++m) {
      CAPTURE(format_shape(s));
      CAPTURE(m);
      const QPoly v = ssyt_principal_spec(s, m);
      CHECK(v == ssyt_principal_spec_backtrack(s, m));
      CHECK(v == brute::ssyt(s, m));
    }
  }
  for (const auto& s : normalized_skew_shapes(7)) {
    if (s.cell_count() < 6) continue;
    CHECK(ssyt_principal_spec(s, 4) == ssyt_principal_spec_backtrack(s, 4));
  }
}

}  // TEST_SUITE
