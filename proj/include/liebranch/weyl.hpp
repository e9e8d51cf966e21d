#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "liebranch/algebra.hpp"

namespace liebranch {

struct DominantResult {
  Weight weight;     // the dominant representative
  int sign = 1;      // parity of the reflection word used
  bool on_boundary = false;  // some label of the dominant image is zero
};

/// Maps a weight into the closure of the fundamental chamber by elementary
/// reflections, always reflecting on the lowest index with a negative label.
DominantResult to_dominant(const SemisimpleAlgebra& alg, Weight w);

/// Same, without sign bookkeeping.
Weight dominant_representative(const SemisimpleAlgebra& alg, Weight w);

/// Full Weyl orbit of a dominant weight, lexicographically sorted.
std::vector<Weight> weyl_orbit(const SemisimpleAlgebra& alg, const Weight& w);

/// Weight multiset of an irreducible highest weight module.
struct WeightSystem {
  Weight highest;
  /// Graded from the highest weight (depth in the root lattice ascending,
  /// ties broken lexicographically descending).
  std::vector<std::pair<Weight, long long>> entries;
  long long dim = 0;

  long long multiplicity(const Weight& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? 0 : entries[it->second].second;
  }

  void finalize();  // rebuilds the lookup index from entries

private:
  std::unordered_map<Weight, std::size_t, WeightHash, WeightEq> index_;
};

/// Multiplicities via the Freudenthal recursion, exact.
WeightSystem weight_system(const SemisimpleAlgebra& alg, const Weight& highest);

/// Weyl dimension formula, exact.
long long dimension(const SemisimpleAlgebra& alg, const Weight& highest);

}  // namespace liebranch
