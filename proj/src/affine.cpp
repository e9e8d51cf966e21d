#include "liebranch/affine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <unordered_map>

namespace liebranch {

namespace {

constexpr long long kWeylOrderCap = 1152;
constexpr double kVerlindeTol = 1e-6;

void check_levels(const SemisimpleAlgebra& alg, const LevelVector& k) {
  if (static_cast<int>(k.size()) != alg.num_factors())
    throw validation_error("level vector needs one entry per simple factor (" +
                           std::to_string(alg.num_factors()) + " for " + alg.name + ")");
  for (long long ks : k)
    if (ks < 0) throw validation_error("levels must be non-negative");
}

}  // namespace

LevelVector level_of(const SemisimpleAlgebra& alg, const Weight& c) {
  if (c.size() != alg.total_rank)
    throw validation_error("level_of: weight length does not match rank of " + alg.name);
  LevelVector out;
  out.reserve(alg.factors.size());
  for (int s = 0; s < alg.num_factors(); ++s)
    out.push_back(alg.factors[static_cast<std::size_t>(s)].comarks.dot(alg.block(c, s)));
  return out;
}

long long level_total(const SemisimpleAlgebra& alg, const Weight& c) {
  long long total = 0;
  for (long long v : level_of(alg, c)) total += v;
  return total;
}

namespace {

void enumerate_factor(const SimpleAlgebra& f, long long k, std::vector<Weight>& out) {
  Weight w = Weight::Zero(f.rank);
  long long used = 0;
  // Odometer over labels with the per-node comark budget.
  std::function<void(int)> rec = [&](int node) {
    if (node == f.rank) {
      out.push_back(w);
      return;
    }
    const long long comark = f.comarks[node];
    for (int v = 0; used + comark * v <= k; ++v) {
      w[node] = v;
      used += comark * v;
      rec(node + 1);
      used -= comark * v;
    }
    w[node] = 0;
  };
  rec(0);
}

}  // namespace

std::vector<Weight> integrable_weights(const SemisimpleAlgebra& alg, const LevelVector& k) {
  check_levels(alg, k);
  std::vector<std::vector<Weight>> per_factor;
  for (int s = 0; s < alg.num_factors(); ++s) {
    per_factor.emplace_back();
    enumerate_factor(alg.factors[static_cast<std::size_t>(s)], k[static_cast<std::size_t>(s)],
                     per_factor.back());
  }
  std::vector<Weight> all;
  Weight w = Weight::Zero(alg.total_rank);
  std::function<void(int)> rec = [&](int s) {
    if (s == alg.num_factors()) {
      all.push_back(w);
      return;
    }
    const int off = alg.offsets[static_cast<std::size_t>(s)];
    for (const Weight& part : per_factor[static_cast<std::size_t>(s)]) {
      w.segment(off, part.size()) = part;
      rec(s + 1);
    }
  };
  rec(0);
  std::sort(all.begin(), all.end(), [&](const Weight& a, const Weight& b) {
    long long la = level_total(alg, a), lb = level_total(alg, b);
    if (la != lb) return la < lb;
    return WeightLess{}(b, a);
  });
  return all;
}

Complex phase(const Rational& q) {
  const double arg = -2.0 * std::numbers::pi * q.frac().to_double();
  return {std::cos(arg), std::sin(arg)};
}

RationalPoint xi_point(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& b) {
  check_levels(alg, k);
  if (b.size() != alg.total_rank)
    throw validation_error("xi_point: weight length does not match rank of " + alg.name);
  RationalPoint x(alg.total_rank);
  for (int s = 0; s < alg.num_factors(); ++s) {
    const SimpleAlgebra& f = alg.factors[static_cast<std::size_t>(s)];
    const int off = alg.offsets[static_cast<std::size_t>(s)];
    const Rational scale(1, k[static_cast<std::size_t>(s)] + f.dual_coxeter);
    for (int i = 0; i < f.rank; ++i) x[off + i] = Rational(b[off + i] + 1) * scale;
  }
  return x;
}

namespace {

// Signed Weyl orbit of a strictly dominant weight; the stabilizer is
// trivial, so every element carries a well-defined sign.
std::vector<std::pair<Weight, int>> signed_orbit(const SimpleAlgebra& f, const Weight& strict) {
  IntMatrix cartan = f.cartan;
  std::unordered_map<Weight, int, WeightHash, WeightEq> seen;
  seen.emplace(strict, 1);
  std::vector<Weight> queue{strict};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Weight cur = queue[qi];
    int sign = seen.at(cur);
    for (int i = 0; i < f.rank; ++i) {
      if (cur[i] == 0) continue;
      Weight next = cur - cur[i] * Weight(cartan.row(i).transpose());
      if (seen.emplace(next, -sign).second) queue.push_back(next);
    }
  }
  std::vector<std::pair<Weight, int>> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end(),
            [](const auto& a, const auto& b) { return WeightLess{}(a.first, b.first); });
  return orbit;
}

// One simple factor of the Kac-Peterson matrix at level k, indexed by the
// given weight list. Exponents are reduced mod 1 in exact integer
// arithmetic before any trigonometry.
Eigen::MatrixXcd factor_s_matrix(const SimpleAlgebra& f, long long k,
                                 const std::vector<Weight>& weights) {
  if (f.weyl_order > kWeylOrderCap)
    throw validation_error("S-matrix path supports factors with Weyl order <= " +
                           std::to_string(kWeylOrderCap) + "; " + f.series +
                           std::to_string(f.rank) + " exceeds it");
  const long long height = k + f.dual_coxeter;
  const long long denom = f.quad_den * height;
  const Eigen::Index n = static_cast<Eigen::Index>(weights.size());

  Complex prefactor;
  {
    const Complex i_unit(0.0, 1.0);
    Complex ipow(1.0, 0.0);
    for (int t = 0; t < f.num_positive_roots % 4; ++t) ipow *= i_unit;
    prefactor = ipow / std::sqrt(static_cast<double>(f.weight_to_coroot_index)) /
                std::pow(static_cast<double>(height), f.rank / 2.0);
  }

  std::vector<Complex> unit(static_cast<std::size_t>(denom));
  for (long long r = 0; r < denom; ++r) {
    const double arg =
        -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(denom);
    unit[static_cast<std::size_t>(r)] = Complex(std::cos(arg), std::sin(arg));
  }

  Eigen::MatrixXcd m(n, n);
  std::vector<long long> dot(static_cast<std::size_t>(f.rank));
  for (Eigen::Index ai = 0; ai < n; ++ai) {
    auto orbit = signed_orbit(f, weights[static_cast<std::size_t>(ai)] + f.rho);
    for (Eigen::Index bi = ai; bi < n; ++bi) {
      const Weight shifted_b = weights[static_cast<std::size_t>(bi)] + f.rho;
      for (int i = 0; i < f.rank; ++i) {
        long long acc = 0;
        for (int j = 0; j < f.rank; ++j)
          acc += static_cast<long long>(f.quad_num(i, j)) * shifted_b[j];
        dot[static_cast<std::size_t>(i)] = acc;
      }
      Complex sum(0.0, 0.0);
      for (const auto& [mu, sign] : orbit) {
        long long num = 0;
        for (int i = 0; i < f.rank; ++i) num += mu[i] * dot[static_cast<std::size_t>(i)];
        num %= denom;
        if (num < 0) num += denom;
        sum += static_cast<double>(sign) * unit[static_cast<std::size_t>(num)];
      }
      m(ai, bi) = prefactor * sum;
      m(bi, ai) = m(ai, bi);  // Kac-Peterson matrices are symmetric
    }
  }
  return m;
}

}  // namespace

Eigen::Index SMatrixTable::index_of(const Weight& w) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == w) return static_cast<Eigen::Index>(i);
  throw validation_error("weight " + format_weight(w) + " is not integrable at this level");
}

double SMatrixTable::unitarity_residual() const {
  Eigen::MatrixXcd gram = s.adjoint() * s;
  gram -= Eigen::MatrixXcd::Identity(s.rows(), s.cols());
  return gram.cwiseAbs().maxCoeff();
}

SMatrixTable s_matrix(const SemisimpleAlgebra& alg, const LevelVector& k) {
  check_levels(alg, k);
  SMatrixTable table;
  table.algebra = alg;
  table.level = k;
  table.weights = integrable_weights(alg, k);

  std::vector<Eigen::MatrixXcd> per_factor;
  std::vector<std::vector<Weight>> factor_weights;
  std::vector<std::unordered_map<Weight, Eigen::Index, WeightHash, WeightEq>> factor_index;
  for (int s = 0; s < alg.num_factors(); ++s) {
    const SimpleAlgebra& f = alg.factors[static_cast<std::size_t>(s)];
    std::vector<Weight> ws;
    enumerate_factor(f, k[static_cast<std::size_t>(s)], ws);
    per_factor.push_back(factor_s_matrix(f, k[static_cast<std::size_t>(s)], ws));
    std::unordered_map<Weight, Eigen::Index, WeightHash, WeightEq> idx;
    for (std::size_t i = 0; i < ws.size(); ++i) idx.emplace(ws[i], static_cast<Eigen::Index>(i));
    factor_weights.push_back(std::move(ws));
    factor_index.push_back(std::move(idx));
  }

  const Eigen::Index n = static_cast<Eigen::Index>(table.weights.size());
  std::vector<std::vector<Eigen::Index>> decomposed(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (int s = 0; s < alg.num_factors(); ++s)
      decomposed[static_cast<std::size_t>(i)].push_back(
          factor_index[static_cast<std::size_t>(s)].at(
              alg.block(table.weights[static_cast<std::size_t>(i)], s)));

  table.s = Eigen::MatrixXcd(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      Complex v(1.0, 0.0);
      for (int s = 0; s < alg.num_factors(); ++s)
        v *= per_factor[static_cast<std::size_t>(s)](
            decomposed[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)],
            decomposed[static_cast<std::size_t>(b)][static_cast<std::size_t>(s)]);
      table.s(a, b) = v;
    }
  return table;
}

Complex s_entry(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& a,
                const Weight& b) {
  check_levels(alg, k);
  if (a.size() != alg.total_rank || b.size() != alg.total_rank)
    throw validation_error("s_entry: weight length does not match rank of " + alg.name);
  LevelVector la = level_of(alg, a), lb = level_of(alg, b);
  for (int s = 0; s < alg.num_factors(); ++s) {
    if (!is_dominant(a) || !is_dominant(b) || la[static_cast<std::size_t>(s)] > k[static_cast<std::size_t>(s)] ||
        lb[static_cast<std::size_t>(s)] > k[static_cast<std::size_t>(s)])
      throw validation_error("s_entry: weights must be integrable at the given level");
  }
  Complex v(1.0, 0.0);
  for (int s = 0; s < alg.num_factors(); ++s) {
    const SimpleAlgebra& f = alg.factors[static_cast<std::size_t>(s)];
    std::vector<Weight> pair{alg.block(a, s), alg.block(b, s)};
    if (pair[0] == pair[1]) pair.pop_back();
    Eigen::MatrixXcd m = factor_s_matrix(f, k[static_cast<std::size_t>(s)], pair);
    v *= m(0, pair.size() == 1 ? 0 : 1);
  }
  return v;
}

Complex character_direct(const SemisimpleAlgebra& alg, const WeightSystem& system,
                         const RationalPoint& x) {
  if (x.size() != alg.total_rank)
    throw validation_error("character_direct: point length does not match rank");
  RatVector fx = alg.quad_form * x;
  Complex sum(0.0, 0.0);
  for (const auto& [j, m] : system.entries) {
    Rational q(0);
    for (Eigen::Index t = 0; t < alg.total_rank; ++t) q += Rational(j[t]) * fx[t];
    sum += static_cast<double>(m) * phase(q);
  }
  return sum;
}

Complex character_direct(const SemisimpleAlgebra& alg, const Weight& i, const RationalPoint& x) {
  return character_direct(alg, weight_system(alg, i), x);
}

Complex character_via_s(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& a,
                        const Weight& b) {
  Complex denom = s_entry(alg, k, b, Weight::Zero(alg.total_rank));
  return s_entry(alg, k, b, a) / denom;
}

long long verlinde(const SMatrixTable& table, const Weight& i, const Weight& j, const Weight& l,
                   double* residual_out) {
  const Eigen::Index ii = table.index_of(i);
  const Eigen::Index ji = table.index_of(j);
  const Eigen::Index li = table.index_of(l);
  const Eigen::Index zi = table.index_of(Weight::Zero(table.algebra.total_rank));
  Complex sum(0.0, 0.0);
  for (Eigen::Index m = 0; m < table.s.rows(); ++m)
    sum += std::conj(table.s(m, li)) * table.s(m, ii) * table.s(m, ji) / table.s(m, zi);
  const double rounded = std::round(sum.real());
  const double residual = std::max(std::abs(sum.imag()), std::abs(sum.real() - rounded));
  if (residual_out) *residual_out = residual;
  if (residual > kVerlindeTol)
    throw numeric_error("verlinde: rounding residual " + std::to_string(residual) +
                        " exceeds tolerance");
  if (rounded < 0) throw numeric_error("verlinde: negative fusion coefficient");
  return static_cast<long long>(rounded);
}

long long verlinde(const SemisimpleAlgebra& alg, const LevelVector& k, const Weight& i,
                   const Weight& j, const Weight& l, double* residual_out) {
  return verlinde(s_matrix(alg, k), i, j, l, residual_out);
}

}  // namespace liebranch
