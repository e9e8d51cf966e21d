#pragma once

#include <vector>

#include "liebranch/algebra.hpp"
#include "liebranch/weyl.hpp"

namespace liebranch {

/// One non-negative level per simple factor.
using LevelVector = std::vector<long long>;

LevelVector level_of(const SemisimpleAlgebra& alg, const Weight& c);
long long level_total(const SemisimpleAlgebra& alg, const Weight& c);

/// All dominant weights with per-factor level at most k, ordered by total
/// level ascending, ties lexicographically descending.
std::vector<Weight> integrable_weights(const SemisimpleAlgebra& alg, const LevelVector& k);

/// exp(-2*pi*i*q) for rational q, reduced mod 1 before evaluation.
Complex phase(const Rational& q);

/// (b+rho)/(k+gv) blockwise; characters evaluated here carry the implicit
/// -2*pi*i prefactor (see RationalPoint).
RationalPoint xi_point(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& b);

/// Modular S-matrix of the affine extension at level k, indexed by the
/// integrable weights in their canonical order.
struct SMatrixTable {
  SemisimpleAlgebra algebra;
  LevelVector level;
  std::vector<Weight> weights;
  Eigen::MatrixXcd s;

  Eigen::Index index_of(const Weight& w) const;
  double unitarity_residual() const;  // max |(S^dag S - 1)_ab|
};

SMatrixTable s_matrix(const SemisimpleAlgebra& alg, const LevelVector& k);

Complex s_entry(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& a,
                const Weight& b);

/// Character as the plain exponential sum over the weight system.
Complex character_direct(const SemisimpleAlgebra& alg, const Weight& i, const RationalPoint& x);
Complex character_direct(const SemisimpleAlgebra& alg, const WeightSystem& system,
                         const RationalPoint& x);

/// Character from S-matrix ratios, S_ba / S_b0.
Complex character_via_s(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& a,
                        const Weight& b);

/// Fusion coefficient, rounded; throws numeric_error when the residual
/// exceeds 1e-6 or the rounded value is negative.
long long verlinde(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& i,
                   const Weight& j, const Weight& l, double* residual_out = nullptr);
long long verlinde(const SMatrixTable& table, const Weight& i, const Weight& j, const Weight& l,
                   double* residual_out = nullptr);

}  // namespace liebranch
