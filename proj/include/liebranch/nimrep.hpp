#pragma once

#include <string>
#include <vector>

#include "liebranch/branching.hpp"

namespace liebranch {

/// Finite window of a fusion-ring representation matrix: rows and columns
/// both run over the listed dominant p-weights. Entries are exact; the
/// window only restricts which columns are reported.
struct NimMatrix {
  std::string embedding_name;
  Weight source;
  std::vector<Weight> window;
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> entries;  // (row b, col a)

  long long at(const Weight& b, const Weight& a) const;
};

NimMatrix nim_window(const Embedding& emb, const Weight& i, const std::vector<Weight>& window);

/// Dominant p-weights with per-factor level at most the given cutoff.
std::vector<Weight> level_window(const SemisimpleAlgebra& p, const LevelVector& cutoff);

struct NimCheckReport {
  bool ok = false;
  long long max_violation = 0;
  std::size_t interior_size = 0;
  std::size_t window_size = 0;
  LevelVector margin;
  std::string detail;
};

/// Verifies n_i n_j = sum_l N_ij^l n_l and the transpose axiom on the
/// interior of a level-complete window. The margin must dominate the level
/// shift of both sources, otherwise a window_error is raised instead of a
/// spurious failure.
NimCheckReport verify_nim(const Embedding& emb, const Weight& i, const Weight& j,
                          const std::vector<Weight>& window, const LevelVector& margin);

/// Boundary label of the charge-conjugation-twisted A2 theory: a symmetric
/// half-integer weight (t/2, t/2), stored through t = 2*alpha.
struct TwistedLabel {
  long long twice = 0;
  long long level = 0;
};

/// alpha = a/2; requires 0 <= a <= floor(k/2).
TwistedLabel psi(long long k, long long a);

/// alpha = (k-a)/4; requires k even, a even, 0 <= a <= k.
TwistedLabel psi_prime(long long k, long long a);

/// The level-dependent identification of B_n weights with fractional
/// symmetric A_{2n} labels; validates the selection rule (last label even,
/// weights inside the level budget).
RatVector a2n_psi_prime(int n, long long k, const Weight& a);

/// Twisted A2 S-matrix entry, real.
double a2_twisted_s(long long k, long long mu, const TwistedLabel& alpha);

/// Symmetric-weight S-ratio S_{(mu,mu),(i1,i2)} / S_{(mu,mu),(0,0)} of A2
/// at level k, in closed form.
double a2_symmetric_s_ratio(long long k, long long mu, int i1, int i2);

/// Finite-level twisted NIM-rep entry (row beta, column alpha), rounded
/// with a residual guard.
long long a2_nimrep_finite(long long k, int i1, int i2, const TwistedLabel& alpha,
                           const TwistedLabel& beta, double* residual_out = nullptr);

/// Same entry at psi-prime labels via the extended summation range over the
/// level-(k+1) A1 S-matrix; agrees with a2_nimrep_finite.
long long a2_nimrep_extended(long long k, int i1, int i2, long long a, long long b,
                             double* residual_out = nullptr);

}  // namespace liebranch
