#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liebranch/types.hpp"

namespace liebranch {

/// Root data of one simple factor, fully derived at construction time and
/// exact: the quadratic form is normalized so that (theta,theta) = 2, node
/// numbering follows Bourbaki.
struct SimpleAlgebra {
  char series = 'A';
  int rank = 0;

  /// Row i holds the Dynkin labels of the i-th simple root.
  IntMatrix cartan;
  /// Quadratic form matrix F with (lambda,mu) = lambda^T F mu on labels.
  RatMatrix quad_form;
  RatMatrix quad_form_inv;
  IntMatrix quad_num;  // quad_form * quad_den
  long long quad_den = 1;
  Weight rho;
  Weight theta;
  /// F*theta; the level of a weight c is comarks.dot(c).
  Weight comarks;
  long long dual_coxeter = 0;
  int num_positive_roots = 0;
  /// Label vectors, ordered by height then lexicographically.
  std::vector<Weight> positive_roots;
  std::vector<int> positive_root_heights;
  /// Diagram conjugation as a node permutation.
  std::vector<int> conjugation;
  long long weyl_order = 0;
  /// Index of the coroot lattice inside the weight lattice.
  long long weight_to_coroot_index = 1;
};

/// Ordered direct sum of simple factors with the assembled block data.
/// Immutable after construction; safe for concurrent reads.
struct SemisimpleAlgebra {
  std::vector<SimpleAlgebra> factors;
  std::vector<int> offsets;  // block start per factor
  int total_rank = 0;
  std::string name;  // canonical spelling, e.g. "A2+B3"

  IntMatrix cartan;      // block diagonal, rows = simple roots
  RatMatrix quad_form;   // block diagonal F
  RatMatrix quad_form_inv;
  IntMatrix quad_num;    // quad_form * quad_den, for fast integer inners
  long long quad_den = 1;
  Weight rho;
  Weight theta;  // per-factor highest roots, concatenated
  std::vector<Weight> positive_roots;  // embedded in the total rank
  std::vector<int> positive_root_heights;
  std::vector<int> conjugation;

  Eigen::Index rank() const { return total_rank; }
  int num_factors() const { return static_cast<int>(factors.size()); }

  /// Labels of weight w belonging to factor s.
  Weight block(const Weight& w, int s) const {
    return w.segment(offsets[static_cast<std::size_t>(s)], factors[static_cast<std::size_t>(s)].rank);
  }
};

bool is_admissible(char series, int rank);

SimpleAlgebra build_simple(char series, int rank);

SemisimpleAlgebra build_algebra(const std::vector<std::pair<char, int>>& factors);

/// Grammar: "<letter><rank>" factors joined by '+', e.g. "A2", "a1+A1", "B3".
SemisimpleAlgebra build_algebra(const std::string& spec);

Rational inner(const SemisimpleAlgebra& alg, const RatVector& x, const RatVector& y);
Rational inner(const SemisimpleAlgebra& alg, const Weight& x, const Weight& y);

Weight conjugate(const SemisimpleAlgebra& alg, const Weight& w);

}  // namespace liebranch
