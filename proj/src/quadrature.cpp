#include "liebranch/quadrature.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace liebranch {

namespace {

constexpr long long kMaxPoints = 1 << 20;

QuadratureResult adaptive_midpoint(const std::function<double(double)>& f, double lo, double hi,
                                   double tol) {
  double prev = 0.0;
  bool have_prev = false;
  for (long long n = 128; n <= kMaxPoints; n *= 2) {
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = 0.0;
    for (long long t = 0; t < n; ++t) sum += f(lo + (static_cast<double>(t) + 0.5) * h);
    sum *= h;
    if (have_prev && std::abs(sum - prev) < tol / 10.0) {
      QuadratureResult r;
      r.value = sum;
      r.rounded = std::llround(sum);
      r.residual = std::abs(sum - static_cast<double>(r.rounded));
      r.points = n;
      if (r.residual > tol)
        throw numeric_error("integral residual " + std::to_string(r.residual) +
                            " exceeds tolerance " + std::to_string(tol));
      return r;
    }
    prev = sum;
    have_prev = true;
  }
  throw numeric_error("integral did not converge within " + std::to_string(kMaxPoints) +
                      " points");
}

}  // namespace

QuadratureResult integral_a1_tensor(int a1, int a2, int a, double tol) {
  if (a1 < 0 || a2 < 0 || a < 0)
    throw validation_error("integral_a1_tensor: labels must be non-negative");
  const double pi = std::numbers::pi;
  auto f = [=](double x) {
    return 2.0 * std::sin(pi * (a + 1) * x) * std::sin(pi * (a1 + 1) * x) *
           std::sin(pi * (a2 + 1) * x) / std::sin(pi * x);
  };
  return adaptive_midpoint(f, 0.0, 1.0, tol);
}

QuadratureResult integral_a1_in_a2(int i1, int i2, int a, double tol) {
  if (i1 < 0 || i2 < 0 || a < 0)
    throw validation_error("integral_a1_in_a2: labels must be non-negative");
  const double pi = std::numbers::pi;
  auto f = [=](double x) {
    const double s = std::sin(pi * x);
    return std::sin(2.0 * pi * (a + 1) * x) *
           (std::sin(2.0 * pi * (i1 + 1) * x) + std::sin(2.0 * pi * (i2 + 1) * x) -
            std::sin(2.0 * pi * (i1 + i2 + 2) * x)) /
           (s * s);
  };
  return adaptive_midpoint(f, 0.0, 0.5, tol);
}

std::vector<TrendPoint> riemann_trend(const Embedding& emb, const Weight& i, const Weight& a,
                                      const std::vector<LevelVector>& k_list) {
  std::vector<TrendPoint> trend;
  trend.reserve(k_list.size());
  for (const LevelVector& k : k_list) {
    BranchingTable table = branch_closed(emb, i, k);
    trend.push_back(TrendPoint{k, table.coefficient(a), table.residual});
  }
  return trend;
}

}  // namespace liebranch
