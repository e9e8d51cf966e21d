#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebranch/affine.hpp"
#include "liebranch/embedding.hpp"

namespace liebranch {

enum class BranchMethod { closed, racah_speiser, oracle };

const char* method_name(BranchMethod m);

/// Decomposition of one g-irrep into p-irreps. Zero coefficients are
/// omitted; rows are ordered by level descending, ties lexicographically.
struct BranchingTable {
  std::string embedding_name;
  Weight source;
  std::vector<std::pair<Weight, long long>> entries;
  BranchMethod method = BranchMethod::racah_speiser;
  double residual = 0.0;  // closed method only

  long long coefficient(const Weight& a) const;
  bool same_entries(const BranchingTable& other) const;
};

/// Per-factor level that bounds every subrepresentation appearing in the
/// decomposition: max over the projected weight system of the source.
LevelVector level_bound(const Embedding& emb, const Weight& i);

/// Signed reflection of each projected, rho-shifted weight into the
/// dominant chamber; boundary weights are dropped.
BranchingTable branch_rs(const Embedding& emb, const Weight& i);

/// Affine closed formula: sum of S-matrix weights times characters at the
/// rational evaluation points, rounded with a recorded residual. The level
/// defaults to level_bound and must dominate it when given.
BranchingTable branch_closed(const Embedding& emb, const Weight& i,
                             std::optional<LevelVector> k = std::nullopt);

/// Independent brute force: peel highest weights off the projected
/// multiset, subtracting one full weight system at a time.
BranchingTable branch_oracle(const Embedding& emb, const Weight& i);

BranchingTable branch(const Embedding& emb, const Weight& i, BranchMethod method,
                      std::optional<LevelVector> k = std::nullopt);

/// Tensor product multiplicities of alg as branching of the diagonal
/// embedding alg -> alg + alg; exact.
BranchingTable tensor_product(const SemisimpleAlgebra& alg, const Weight& i, const Weight& j);

}  // namespace liebranch
