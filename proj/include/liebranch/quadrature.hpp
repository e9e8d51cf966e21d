#pragma once

#include <vector>

#include "liebranch/branching.hpp"

namespace liebranch {

struct QuadratureResult {
  double value = 0.0;
  long long rounded = 0;
  double residual = 0.0;
  long long points = 0;
};

/// 2 * integral over [0,1] of
///   sin(pi(a+1)x) sin(pi(a1+1)x) sin(pi(a2+1)x) / sin(pi x);
/// adaptive midpoint rule, never sampling the removable endpoints.
QuadratureResult integral_a1_tensor(int a1, int a2, int a, double tol = 1e-4);

/// Integral over [0,1/2] of
///   sin(2pi(a+1)x) (sin(2pi(i1+1)x)+sin(2pi(i2+1)x)-sin(2pi(i1+i2+2)x)) / sin^2(pi x).
QuadratureResult integral_a1_in_a2(int i1, int i2, int a, double tol = 1e-4);

struct TrendPoint {
  LevelVector level;
  long long value = 0;
  double residual = 0.0;
};

/// Evaluates the closed branching formula at each level and reports the
/// (constant) rounded value together with the pre-rounding residual.
std::vector<TrendPoint> riemann_trend(const Embedding& emb, const Weight& i, const Weight& a,
                                      const std::vector<LevelVector>& k_list);

}  // namespace liebranch
