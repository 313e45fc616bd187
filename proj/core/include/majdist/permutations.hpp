#pragma once

#include <map>
#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/tableaux.hpp"

namespace majdist {

/// A word containing each of 1..n exactly once.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError when the word is not a permutation of 1..n.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }

 private:
  std::vector<int> word_;
};

// Descent at position i (1-based) when word[i] > word[i+1].
DescentStats perm_statistics(const Permutation& p);
DescentStats perm_statistics(const std::vector<int>& word);

int longest_decreasing_subsequence(const std::vector<int>& word);
bool avoids_321(const Permutation& p);
bool avoids_321(const std::vector<int>& word);

struct RskPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

// Row-insertion RSK. Des(p) equals Des(recording).
RskPair rsk(const Permutation& p);

struct APolynomialConfig {
  int permutation_limit = 10;
  int jobs = 1;
};

// sum over 321-avoiders of length n with exactly k descents of q^maj,
// computed by sweeping S_n.
std::map<int, QPoly> a_polynomials_direct(int n, const APolynomialConfig& config = {});

// Same map through RSK: A_{n,i} = sum_{k=i}^{floor(n/2)} g^{(n-k,k)} f_{(n-k,k),i}.
std::map<int, QPoly> a_polynomials_via_tableaux(int n);

// Runs both routes and returns the direct one. Throws InternalError
// ("RSK decomposition violation") if they differ, LimitExceeded past the limit.
std::map<int, QPoly> a_polynomials(int n, const APolynomialConfig& config = {});

}  // namespace majdist
