#include <doctest.h>

#include "majdist/kr_koh.hpp"
#include "majdist/tableaux.hpp"

using namespace majdist;

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

TEST_SUITE("kr_koh") {

TEST_CASE("admissible sequences") {
  auto seqs = admissible_sequences(Partition({2, 1}), 1);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].alphas == std::vector<Partition>{Partition({3}), Partition({1})});
  CHECK(seqs[0].part(1, 1) == 1);
  CHECK(seqs[0].part(1, 2) == 0);
  CHECK(seqs[0].part(5, 1) == 0);

  seqs = admissible_sequences(Partition({4}), 0);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].alphas == std::vector<Partition>{Partition({4})});

  seqs = admissible_sequences(Partition({2, 2}), 2);
  REQUIRE_FALSE(seqs.empty());
  for (const auto& s : seqs) CHECK(s.alphas[1] == Partition({2}));

  CHECK(admissible_sequences(Partition({2, 1}), 2).empty());
  CHECK(admissible_sequences(Partition({2, 1}), 0).empty());
}

TEST_CASE("summand examples") {
  const AdmissibleSequence a{{Partition({3}), Partition({1})}};
  const auto d = kr_summand_details(a);
  CHECK(d.c == 1);
  CHECK(d.vacancy_sum == 1);
  CHECK(d.value == QPoly{0, 1, 1});
  CHECK(central_degree_identity(a, Partition({2, 1}), 1));
  for (int n = 1; n <= 6; ++n) {
    const AdmissibleSequence row{{Partition({n})}};
    CHECK(kr_summand(row) == QPoly::monomial(choose2(n)));
    CHECK(central_degree_identity(row, Partition({n}), 0));
  }
}

TEST_CASE("Kostka polynomial examples") {
  CHECK(kr_kostka(Partition({2, 1}), 1) == QPoly{0, 1, 1});
  CHECK(kr_kostka(Partition({5}), 0) == QPoly::monomial(10));
  CHECK(kr_kostka(Partition({2, 2}), 1) == QPoly::monomial(4));
  CHECK(kr_kostka(Partition({2, 2}), 3).is_zero());
}

TEST_CASE("reversal relation with the descent distribution") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto d = distribution(SkewShape(lambda));
      QPoly kr_total;
      for (int k = 0; k <= n - lambda.first(); ++k) {
        CAPTURE(format_partition(lambda));
        CAPTURE(k);
        const QPoly kr = kr_kostka(lambda, k);
        CHECK(kr == reciprocal_shift(d.at(k), choose2(n)));
        kr_total += kr;
        for (const auto& a : admissible_sequences(lambda, k)) {
          CHECK(central_degree_identity(a, lambda, k));
        }
      }
      CHECK(kr_total.at_one() == frt_count(lambda));
    }
  }
}

TEST_CASE("KOH terms") {
  auto terms = koh_terms(2, 1);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].lambda == Partition({2}));
  CHECK(terms[0].value.is_zero());
  CHECK(terms[1].value == QPoly{1, 1, 1});
  CHECK(terms[1].Y == std::vector<int>{0, 1, 2});

  terms = koh_terms(2, 2);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].value == QPoly::monomial(2));
  CHECK(terms[1].value == gauss_binomial(5, 1));
  CHECK(koh_expansion(2, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(koh_expansion(0, 3) == QPoly{1});
}

TEST_CASE("KOH expansion reproduces Gaussian binomials") {
  for (int n = 0; n <= 9; ++n) {
    for (int a = 0; n + a <= 10; ++a) {
      CHECK(koh_expansion(n, a) == gauss_binomial(n + a, n));
      for (const auto& t : koh_terms(n, a)) {
        if (t.value.is_zero()) continue;
        const auto st = shape_stats(t.value);
        CHECK(st.symmetric);
        CHECK(st.unimodal);
        CHECK(st.darga == n * a);
      }
    }
  }
}

}  // TEST_SUITE
