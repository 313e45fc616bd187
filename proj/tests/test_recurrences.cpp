#include <doctest.h>

#include "majdist/recurrences.hpp"
#include "majdist/verify.hpp"

using namespace majdist;

TEST_SUITE("recurrences") {

TEST_CASE("oracle cache") {
  OracleCache cache;
  CHECK(cache.f({2, 2}, 1) == QPoly::monomial(2));
  CHECK(cache.f({2, 2, 0, 0}, 2) == QPoly::monomial(4));
  CHECK(cache.f({1, 2}, 1).is_zero());
  CHECK(cache.f({2, 2}, -1).is_zero());
  const auto& a = cache.get(SkewShape(Partition({3, 1})));
  const auto& b = cache.get(SkewShape(Partition({3, 1})));
  CHECK(&a == &b);
  // Splitting by the row of the largest entry partitions the distribution.
  for (const auto& p : partitions_of(6)) {
    for (int i = 0; i < 6; ++i) {
      QPoly sum;
      for (int row = 1; row <= p.length(); ++row) sum += cache.f_max_row({p.parts().begin(), p.parts().end()}, row, i);
      CHECK(sum == cache.f({p.parts().begin(), p.parts().end()}, i));
    }
  }
}

TEST_CASE("f-star recurrence") {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 2; i <= n + k; ++i) {
          const auto r = fstar_recurrence(n, k, j, i);
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(j);
          CAPTURE(i);
          CHECK(r.holds());
        }
      }
    }
  }
}

TEST_CASE("row-of-maximum identities for (n, k, 2)") {
  OracleCache cache;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (int i = 0; i <= n + k + 2; ++i) {
        const auto ids = nk2_proof_identities(n, k, i, cache);
        REQUIRE(ids.size() == 5);
        CHECK(ids[0].label == "row1");
        CHECK(ids[4].label == "combined");
        for (const auto& r : ids) {
          CAPTURE(r.label);
          CHECK(r.holds());
        }
      }
    }
  }
}

TEST_CASE("three-row recurrence: corrected form holds") {
  OracleCache cache;
  for (int l1 = 1; l1 <= 5; ++l1) {
    for (int l2 = 0; l2 <= l1; ++l2) {
      for (int l3 = 0; l3 <= l2; ++l3) {
        for (int i = 0; i < l1 + l2 + l3; ++i) CHECK(three_row_recurrence(l1, l2, l3, i, false, cache).holds());
      }
    }
  }
}

TEST_CASE("three-row recurrence: printed form fails exactly on the pinned cases") {
  OracleCache cache;
  CHECK(three_row_recurrence(2, 2, 1, 2, true, cache).holds());
  CHECK_FALSE(three_row_recurrence(2, 2, 2, 2, true, cache).holds());
  SuiteBounds b;
  b.max = 12;
  const Report r = run_suite("three_row_recurrence_printed", b);
  CHECK(r.kind == FormulaStatus::conjecture);
  CHECK(r.status == ReportStatus::conjecture_refuted);
  CHECK(r.cases.size() == 885);
  CHECK(r.failures() == 78);
  const Finding* first = nullptr;
  for (const auto& f : r.cases) {
    if (!f.passed()) {
      first = &f;
      break;
    }
  }
  REQUIRE(first != nullptr);
  CHECK(first->shape == "2,2,2");
  CHECK(first->params.at("i") == 2);
  for (const auto& f : r.cases) {
    if (!f.passed()) CHECK(Partition(parse_partition(f.shape))[2] >= 2);
  }
}

TEST_CASE("first-row recurrence") {
  OracleCache cache;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int i = 0; i < n; ++i) {
        CAPTURE(format_partition(lambda));
        CAPTURE(i);
        CHECK(first_row_recurrence(lambda, i, cache).holds());
      }
    }
  }
}

}  // TEST_SUITE
