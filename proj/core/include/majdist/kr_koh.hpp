#pragma once

#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/shapes.hpp"

namespace majdist {

/// alphas[0] = (|lambda|); alphas[a] has size lambda_{a+1} + lambda_{a+2} + ...
/// Trailing empty partitions are not stored.
struct AdmissibleSequence {
  std::vector<Partition> alphas;

  // alpha^a_i with 1-based i; zero past the stored data.
  int part(int a, int i) const;
  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;
};

// Every sequence for lambda with alpha^1_1 == k, in lexicographic order of the
// partition lists. Empty when k is out of range.
std::vector<AdmissibleSequence> admissible_sequences(const Partition& lambda, int k);

struct KrSummandDetails {
  long long c = 0;             // c(alpha)
  long long vacancy_sum = 0;   // sum over a, i of P^a_i * (alpha^a_i - alpha^a_{i+1})
  QPoly value;
};

KrSummandDetails kr_summand_details(const AdmissibleSequence& alpha);
QPoly kr_summand(const AdmissibleSequence& alpha);

// Sum of kr_summand over admissible_sequences(lambda, k). Zero when k is
// outside 0..|lambda| - lambda_1.
QPoly kr_kostka(const Partition& lambda, int k);

// 2 c(alpha) + sum P m == 2 C(n,2) - n k, and a nonzero summand has that
// value as its darga.
bool central_degree_identity(const AdmissibleSequence& alpha, const Partition& lambda, int k);

struct KohTerm {
  Partition lambda;
  std::vector<int> Y;  // Y[0] = 0, Y[i] = lambda_1 + ... + lambda_i
  QPoly value;
};

// One term per partition of n, in partitions_of order.
std::vector<KohTerm> koh_terms(int n, int a);
QPoly koh_expansion(int n, int a);

}  // namespace majdist
