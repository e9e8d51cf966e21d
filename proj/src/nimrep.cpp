#include "liebranch/nimrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace liebranch {

namespace {

constexpr double kNimTol = 1e-6;

std::unordered_map<Weight, Eigen::Index, WeightHash, WeightEq> index_window(
    const std::vector<Weight>& window) {
  std::unordered_map<Weight, Eigen::Index, WeightHash, WeightEq> idx;
  for (std::size_t i = 0; i < window.size(); ++i)
    idx.emplace(window[i], static_cast<Eigen::Index>(i));
  return idx;
}

}  // namespace

long long NimMatrix::at(const Weight& b, const Weight& a) const {
  Eigen::Index bi = -1, ai = -1;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] == b) bi = static_cast<Eigen::Index>(i);
    if (window[i] == a) ai = static_cast<Eigen::Index>(i);
  }
  if (bi < 0 || ai < 0) throw validation_error("label outside the NIM window");
  return entries(bi, ai);
}

std::vector<Weight> level_window(const SemisimpleAlgebra& p, const LevelVector& cutoff) {
  return integrable_weights(p, cutoff);
}

NimMatrix nim_window(const Embedding& emb, const Weight& i, const std::vector<Weight>& window) {
  if (window.empty()) throw validation_error("nim_window: empty window");
  for (const Weight& b : window) {
    if (b.size() != emb.p.total_rank || !is_dominant(b))
      throw validation_error("nim_window: window entries must be dominant " + emb.p.name +
                             " weights");
  }
  if (i.size() != emb.g.total_rank || !is_dominant(i))
    throw validation_error("nim_window: source must be a dominant " + emb.g.name + " weight");

  const auto col = index_window(window);
  const WeightSystem ws = weight_system(emb.g, i);
  NimMatrix nim;
  nim.embedding_name = emb.name;
  nim.source = i;
  nim.window = window;
  const Eigen::Index n = static_cast<Eigen::Index>(window.size());
  nim.entries = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);

  for (Eigen::Index bi = 0; bi < n; ++bi) {
    const Weight shift = window[static_cast<std::size_t>(bi)] + emb.p.rho;
    for (const auto& [j, m] : ws.entries) {
      DominantResult dr = to_dominant(emb.p, emb.proj * j + shift);
      if (dr.on_boundary) continue;
      auto it = col.find(dr.weight - emb.p.rho);
      if (it != col.end()) nim.entries(bi, it->second) += dr.sign * m;
    }
  }
  if ((nim.entries.array() < 0).any())
    throw embedding_error("negative NIM entry; the projection matrix of '" + emb.name +
                          "' does not describe an embedding");
  return nim;
}

NimCheckReport verify_nim(const Embedding& emb, const Weight& i, const Weight& j,
                          const std::vector<Weight>& window, const LevelVector& margin) {
  if (static_cast<int>(margin.size()) != emb.p.num_factors())
    throw validation_error("margin needs one entry per simple factor of " + emb.p.name);

  LevelVector cutoff(static_cast<std::size_t>(emb.p.num_factors()), 0);
  for (const Weight& w : window) {
    LevelVector lv = level_of(emb.p, w);
    for (std::size_t s = 0; s < cutoff.size(); ++s) cutoff[s] = std::max(cutoff[s], lv[s]);
  }
  {
    std::vector<Weight> complete = level_window(emb.p, cutoff);
    auto idx = index_window(window);
    if (complete.size() != window.size() ||
        !std::all_of(complete.begin(), complete.end(),
                     [&](const Weight& w) { return idx.count(w) > 0; }))
      throw window_error("window must contain every dominant weight up to its level cutoff");
  }

  const LevelVector shift_i = level_bound(emb, i);
  const LevelVector shift_j = level_bound(emb, j);
  for (std::size_t s = 0; s < margin.size(); ++s) {
    long long needed = std::max(shift_i[s], shift_j[s]);
    if (margin[s] < needed)
      throw window_error("margin " + std::to_string(margin[s]) + " in factor " +
                         std::to_string(s + 1) + " is below the level shift " +
                         std::to_string(needed) + " of the sources; enlarge the window");
  }

  std::vector<Eigen::Index> interior;
  for (std::size_t b = 0; b < window.size(); ++b) {
    LevelVector lv = level_of(emb.p, window[b]);
    bool inside = true;
    for (std::size_t s = 0; s < margin.size(); ++s)
      if (lv[s] + margin[s] > cutoff[s]) inside = false;
    if (inside) interior.push_back(static_cast<Eigen::Index>(b));
  }
  if (interior.empty())
    throw window_error("window has no interior rows left after the margin; enlarge it");

  const NimMatrix ni = nim_window(emb, i, window);
  const NimMatrix nj = nim_window(emb, j, window);
  const NimMatrix nip = nim_window(emb, conjugate(emb.g, i), window);
  const BranchingTable fusion = tensor_product(emb.g, i, j);
  std::vector<std::pair<long long, NimMatrix>> nl;
  for (const auto& [l, mult] : fusion.entries)
    nl.emplace_back(mult, nim_window(emb, l, window));

  NimCheckReport report;
  report.window_size = window.size();
  report.interior_size = interior.size();
  report.margin = margin;

  const Eigen::Index n = static_cast<Eigen::Index>(window.size());
  long long worst = 0;
  for (Eigen::Index b : interior) {
    for (Eigen::Index a = 0; a < n; ++a) {
      long long lhs = 0;
      for (Eigen::Index c = 0; c < n; ++c) lhs += ni.entries(b, c) * nj.entries(c, a);
      long long rhs = 0;
      for (const auto& [mult, m] : nl) rhs += mult * m.entries(b, a);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  long long transpose_worst = 0;
  for (Eigen::Index b = 0; b < n; ++b)
    for (Eigen::Index a = 0; a < n; ++a)
      transpose_worst = std::max(transpose_worst,
                                 std::abs(nip.entries(b, a) - ni.entries(a, b)));

  report.max_violation = std::max(worst, transpose_worst);
  report.ok = report.max_violation == 0;
  report.detail = "product violation " + std::to_string(worst) + ", transpose violation " +
                  std::to_string(transpose_worst);
  return report;
}

TwistedLabel psi(long long k, long long a) {
  if (k < 2) throw validation_error("twisted labels need level k >= 2");
  if (a < 0 || a > k / 2)
    throw selection_error("psi: weight " + std::to_string(a) + " outside 0..floor(k/2)=" +
                          std::to_string(k / 2));
  return TwistedLabel{a, k};
}

TwistedLabel psi_prime(long long k, long long a) {
  if (k < 2 || k % 2 != 0)
    throw validation_error("psi_prime: level must be even and >= 2");
  if (a % 2 != 0)
    throw selection_error("psi_prime: weight " + std::to_string(a) +
                          " violates the even selection rule");
  if (a < 0 || a > k)
    throw selection_error("psi_prime: weight " + std::to_string(a) + " outside 0..k");
  return TwistedLabel{(k - a) / 2, k};
}

RatVector a2n_psi_prime(int n, long long k, const Weight& a) {
  if (n < 1) throw validation_error("a2n_psi_prime: n must be positive");
  if (k < 2 || k % 2 != 0)
    throw validation_error("a2n_psi_prime: level must be even and >= 2");
  if (a.size() != n) throw validation_error("a2n_psi_prime: weight needs n labels");
  if (!is_dominant(a)) throw validation_error("a2n_psi_prime: weight must be dominant");
  if (a[n - 1] % 2 != 0)
    throw selection_error("a2n_psi_prime: last label must be even");
  long long budget = a[n - 1];
  for (int t = 0; t + 1 < n; ++t) budget += 2 * a[t];
  if (budget > k)
    throw selection_error("a2n_psi_prime: weight exceeds the level budget");

  RatVector out(2 * n);
  for (int t = 0; t + 1 < n; ++t) {
    Rational v(2 * a[n - 2 - t], 4);
    out[t] = v;
    out[2 * n - 1 - t] = v;
  }
  Rational middle(k - budget, 4);
  out[n - 1] = middle;
  out[n] = middle;
  for (int t = 0; t < 2 * n; ++t)
    if ((Rational(2) * out[t]).den() != 1)
      throw selection_error("a2n_psi_prime: label is not half-integral");
  return out;
}

double a2_twisted_s(long long k, long long mu, const TwistedLabel& alpha) {
  if (k < 2 || k % 2 != 0)
    throw validation_error("a2_twisted_s: level must be even and >= 2");
  if (alpha.level != k) throw validation_error("a2_twisted_s: label belongs to another level");
  if (mu < 0 || mu > k)
    throw validation_error("a2_twisted_s: mu outside 0..k");
  if (alpha.twice < 0 || alpha.twice > k / 2)
    throw validation_error("a2_twisted_s: label outside its range");
  const double x = std::numbers::pi / static_cast<double>(k + 3);
  return 2.0 / std::sqrt(static_cast<double>(k + 3)) *
         std::sin(2.0 * x * static_cast<double>((mu + 1) * (alpha.twice + 1)));
}

double a2_symmetric_s_ratio(long long k, long long mu, int i1, int i2) {
  const double x = std::numbers::pi * static_cast<double>(mu + 1) / static_cast<double>(k + 3);
  const double num = std::sin(2.0 * (i1 + 1) * x) + std::sin(2.0 * (i2 + 1) * x) -
                     std::sin(2.0 * (i1 + i2 + 2) * x);
  const double den = 8.0 * std::pow(std::sin(x), 3) * std::cos(x);
  return num / den;
}

long long a2_nimrep_finite(long long k, int i1, int i2, const TwistedLabel& alpha,
                           const TwistedLabel& beta, double* residual_out) {
  if (k < 2 || k % 2 != 0)
    throw validation_error("a2_nimrep_finite: level must be even and >= 2");
  if (i1 < 0 || i2 < 0 || i1 + i2 > k)
    throw validation_error("a2_nimrep_finite: source not integrable at level " +
                           std::to_string(k));
  double sum = 0.0;
  for (long long mu = 0; mu <= k / 2; ++mu)
    sum += a2_twisted_s(k, mu, alpha) * a2_twisted_s(k, mu, beta) *
           a2_symmetric_s_ratio(k, mu, i1, i2);
  const double rounded = std::round(sum);
  const double residual = std::abs(sum - rounded);
  if (residual_out) *residual_out = residual;
  if (residual > kNimTol)
    throw numeric_error("a2_nimrep_finite: residual " + std::to_string(residual) +
                        " exceeds tolerance");
  return static_cast<long long>(rounded);
}

long long a2_nimrep_extended(long long k, int i1, int i2, long long a, long long b,
                             double* residual_out) {
  if (k < 2 || k % 2 != 0)
    throw validation_error("a2_nimrep_extended: level must be even and >= 2");
  if (a % 2 != 0 || b % 2 != 0)
    throw selection_error("a2_nimrep_extended: labels must be even");
  if (a < 0 || a > k || b < 0 || b > k)
    throw selection_error("a2_nimrep_extended: labels outside 0..k");
  if (i1 < 0 || i2 < 0 || i1 + i2 > k)
    throw validation_error("a2_nimrep_extended: source not integrable at level " +
                           std::to_string(k));

  static const SemisimpleAlgebra a2 = build_algebra("A2");
  const WeightSystem ws = weight_system(a2, Weight((Eigen::Vector2i() << i1, i2).finished()));
  const long long height = k + 3;  // A1 at level k+1
  const double norm = 2.0 / static_cast<double>(height);

  Complex sum(0.0, 0.0);
  for (long long mu = 0; mu <= k + 1; ++mu) {
    const double sa = std::sin(std::numbers::pi * static_cast<double>((mu + 1) * (a + 1)) /
                               static_cast<double>(height));
    const double sb = std::sin(std::numbers::pi * static_cast<double>((mu + 1) * (b + 1)) /
                               static_cast<double>(height));
    RationalPoint x(2);
    x[0] = x[1] = Rational(mu + 1, height);
    sum += norm * sa * sb * character_direct(a2, ws, x);
  }
  const double rounded = std::round(sum.real());
  const double residual = std::max(std::abs(sum.imag()), std::abs(sum.real() - rounded));
  if (residual_out) *residual_out = residual;
  if (residual > kNimTol)
    throw numeric_error("a2_nimrep_extended: residual " + std::to_string(residual) +
                        " exceeds tolerance");
  return static_cast<long long>(rounded);
}

}  // namespace liebranch
