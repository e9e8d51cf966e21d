#include "liebranch/algebra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace liebranch {

std::string format_weight(const Weight& w) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

Weight parse_weight(const std::string& text, Eigen::Index expected_rank) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw validation_error("weight literal must look like [1,0]; got '" + text + "'");
  std::vector<int> labels;
  std::string body = t.substr(1, t.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        labels.push_back(v);
      } catch (const std::exception&) {
        throw validation_error("bad weight label '" + item + "' in '" + text + "'");
      }
    }
  }
  if (static_cast<Eigen::Index>(labels.size()) != expected_rank)
    throw validation_error("rank mismatch: expected " + std::to_string(expected_rank) +
                           " labels, got " + std::to_string(labels.size()));
  Weight w(expected_rank);
  for (Eigen::Index i = 0; i < expected_rank; ++i) w[i] = labels[static_cast<std::size_t>(i)];
  return w;
}

bool is_admissible(char series, int rank) {
  switch (series) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace {

// Cartan rows (labels of simple roots) and half root lengths (alpha,alpha)/2.
void series_data(char series, int n, IntMatrix& cartan, std::vector<Rational>& half_len) {
  cartan = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) cartan(i, i) = 2;
  half_len.assign(static_cast<std::size_t>(n), Rational(1));
  auto bond = [&](int i, int j) { cartan(i, j) = cartan(j, i) = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      cartan(n - 2, n - 1) = -2;
      cartan(n - 1, n - 2) = -1;
      half_len[static_cast<std::size_t>(n - 1)] = Rational(1, 2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      cartan(n - 2, n - 1) = -1;
      cartan(n - 1, n - 2) = -2;
      for (int i = 0; i + 1 < n; ++i) half_len[static_cast<std::size_t>(i)] = Rational(1, 2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      // Chain 1-3-4-5-6[-7[-8]] with node 2 attached to node 4 (1-based).
      bond(0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    case 'F':
      bond(0, 1);
      cartan(1, 2) = -2;
      cartan(2, 1) = -1;
      bond(2, 3);
      half_len[2] = half_len[3] = Rational(1, 2);
      break;
    case 'G':
      cartan(0, 1) = -1;
      cartan(1, 0) = -3;
      half_len[0] = Rational(1, 3);
      break;
    default:
      throw validation_error(std::string("unknown series '") + series + "'");
  }
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long long series_weyl_order(char series, int n) {
  switch (series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return factorial(n) << n;
    case 'D': return factorial(n) << (n - 1);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E': return n == 6 ? 51840ll : n == 7 ? 2903040ll : 696729600ll;
    default: return 0;
  }
}

std::vector<int> series_conjugation(char series, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  if (series == 'A') {
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = n - 1 - i;
  } else if (series == 'D' && n % 2 == 1) {
    std::swap(perm[static_cast<std::size_t>(n - 2)], perm[static_cast<std::size_t>(n - 1)]);
  } else if (series == 'E' && n == 6) {
    perm = {5, 1, 4, 3, 2, 0};
  }
  return perm;
}

void enumerate_positive_roots(const IntMatrix& cartan, std::vector<Weight>& roots,
                              std::vector<int>& heights) {
  const int n = static_cast<int>(cartan.rows());
  std::unordered_set<Weight, WeightHash, WeightEq> known;
  std::vector<std::vector<Weight>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < n; ++i) {
    Weight alpha = cartan.row(i).transpose();
    by_height.back().push_back(alpha);
    known.insert(alpha);
  }
  while (!by_height.back().empty()) {
    std::vector<Weight> next;
    for (const Weight& beta : by_height.back()) {
      for (int i = 0; i < n; ++i) {
        // Root string: beta + alpha_i is a root iff q - <beta, alpha_i~> > 0
        // where q counts the down-steps that stay inside the system.
        int q = 0;
        Weight down = beta - Weight(cartan.row(i).transpose());
        while (known.count(down)) {
          ++q;
          down -= Weight(cartan.row(i).transpose());
        }
        if (q - beta[i] > 0) {
          Weight up = beta + Weight(cartan.row(i).transpose());
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    by_height.push_back(std::move(next));
  }
  roots.clear();
  heights.clear();
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    auto& level = by_height[h];
    std::sort(level.begin(), level.end(), WeightLess{});
    for (auto& r : level) {
      roots.push_back(std::move(r));
      heights.push_back(static_cast<int>(h) + 1);
    }
  }
}

Rational det_rational(RatMatrix m) {
  // Gauss elimination with exact pivoting.
  const Eigen::Index n = m.rows();
  Rational det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) / m(c, c);
      for (Eigen::Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

}  // namespace

SimpleAlgebra build_simple(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (!is_admissible(series, rank))
    throw validation_error(std::string("inadmissible algebra ") + series + std::to_string(rank));

  SimpleAlgebra a;
  a.series = series;
  a.rank = rank;
  std::vector<Rational> half_len;
  series_data(series, rank, a.cartan, half_len);

  RatMatrix cart_rat = a.cartan.cast<Rational>();
  RatMatrix d = RatMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) d(i, i) = half_len[static_cast<std::size_t>(i)];
  a.quad_form = d * RatMatrix(cart_rat.inverse()).transpose();
  a.quad_form_inv = a.quad_form.inverse();
  a.quad_den = 1;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) a.quad_den = std::lcm(a.quad_den, a.quad_form(i, j).den());
  a.quad_num = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      a.quad_num(i, j) =
          static_cast<int>(a.quad_form(i, j).num() * (a.quad_den / a.quad_form(i, j).den()));

  a.rho = Weight::Ones(rank);
  enumerate_positive_roots(a.cartan, a.positive_roots, a.positive_root_heights);
  a.num_positive_roots = static_cast<int>(a.positive_roots.size());
  a.theta = a.positive_roots.back();

  RatVector theta_rat = to_rational(a.theta);
  Rational theta_sq = (theta_rat.transpose() * a.quad_form * theta_rat)(0, 0);
  if (theta_sq != Rational(2))
    throw error("internal: highest root normalization failed for " + std::string(1, series) +
                std::to_string(rank));

  RatVector cm = a.quad_form * theta_rat;
  a.comarks = Weight(rank);
  for (int i = 0; i < rank; ++i) {
    if (!cm[i].is_integer())
      throw error("internal: non-integer comark");
    a.comarks[i] = static_cast<int>(cm[i].num());
  }
  a.dual_coxeter = a.comarks.dot(a.rho) + 1;

  a.conjugation = series_conjugation(series, rank);
  a.weyl_order = series_weyl_order(series, rank);

  RatMatrix coroots = cart_rat;
  for (int i = 0; i < rank; ++i) coroots.row(i) /= half_len[static_cast<std::size_t>(i)];
  Rational idx = det_rational(coroots);
  if (!idx.is_integer() || idx.num() <= 0)
    throw error("internal: coroot lattice index is not a positive integer");
  a.weight_to_coroot_index = idx.num();
  return a;
}

SemisimpleAlgebra build_algebra(const std::vector<std::pair<char, int>>& specs) {
  if (specs.empty()) throw validation_error("algebra needs at least one simple factor");
  SemisimpleAlgebra alg;
  for (const auto& [series, rank] : specs) alg.factors.push_back(build_simple(series, rank));

  alg.total_rank = 0;
  for (const auto& f : alg.factors) {
    alg.offsets.push_back(alg.total_rank);
    alg.total_rank += f.rank;
  }

  alg.cartan = IntMatrix::Zero(alg.total_rank, alg.total_rank);
  alg.quad_form = RatMatrix::Zero(alg.total_rank, alg.total_rank);
  alg.quad_form_inv = RatMatrix::Zero(alg.total_rank, alg.total_rank);
  alg.rho = Weight::Ones(alg.total_rank);
  alg.theta = Weight::Zero(alg.total_rank);
  alg.conjugation.assign(static_cast<std::size_t>(alg.total_rank), 0);

  for (std::size_t s = 0; s < alg.factors.size(); ++s) {
    const SimpleAlgebra& f = alg.factors[s];
    const int off = alg.offsets[s];
    alg.cartan.block(off, off, f.rank, f.rank) = f.cartan;
    alg.quad_form.block(off, off, f.rank, f.rank) = f.quad_form;
    alg.quad_form_inv.block(off, off, f.rank, f.rank) = f.quad_form_inv;
    alg.theta.segment(off, f.rank) = f.theta;
    for (int i = 0; i < f.rank; ++i)
      alg.conjugation[static_cast<std::size_t>(off + i)] =
          off + f.conjugation[static_cast<std::size_t>(i)];
    for (std::size_t r = 0; r < f.positive_roots.size(); ++r) {
      Weight total = Weight::Zero(alg.total_rank);
      total.segment(off, f.rank) = f.positive_roots[r];
      alg.positive_roots.push_back(total);
      alg.positive_root_heights.push_back(f.positive_root_heights[r]);
    }
    if (s) alg.name += '+';
    alg.name += f.series;
    alg.name += std::to_string(f.rank);
  }

  long long den = 1;
  for (Eigen::Index i = 0; i < alg.total_rank; ++i)
    for (Eigen::Index j = 0; j < alg.total_rank; ++j)
      den = std::lcm(den, alg.quad_form(i, j).den());
  alg.quad_den = den;
  alg.quad_num = IntMatrix::Zero(alg.total_rank, alg.total_rank);
  for (Eigen::Index i = 0; i < alg.total_rank; ++i)
    for (Eigen::Index j = 0; j < alg.total_rank; ++j)
      alg.quad_num(i, j) = static_cast<int>(alg.quad_form(i, j).num() *
                                            (den / alg.quad_form(i, j).den()));
  return alg;
}

SemisimpleAlgebra build_algebra(const std::string& spec) {
  std::vector<std::pair<char, int>> factors;
  std::vector<std::string> tokens;
  std::string::size_type start = 0;
  for (;;) {
    auto plus = spec.find('+', start);
    tokens.push_back(spec.substr(start, plus == std::string::npos ? plus : plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  for (const std::string& token : tokens) {
    std::string t;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2)
      throw validation_error("bad algebra factor '" + token + "' in '" + spec + "'");
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    int rank = 0;
    try {
      std::size_t pos = 0;
      rank = std::stoi(t.substr(1), &pos);
      if (pos != t.size() - 1) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw validation_error("bad rank in algebra factor '" + token + "'");
    }
    if (!is_admissible(series, rank))
      throw validation_error("inadmissible algebra factor '" + t + "'");
    factors.emplace_back(series, rank);
  }
  return build_algebra(factors);
}

Rational inner(const SemisimpleAlgebra& alg, const RatVector& x, const RatVector& y) {
  if (x.size() != alg.total_rank || y.size() != alg.total_rank)
    throw validation_error("inner: vector length does not match rank " +
                           std::to_string(alg.total_rank));
  return (x.transpose() * alg.quad_form * y)(0, 0);
}

Rational inner(const SemisimpleAlgebra& alg, const Weight& x, const Weight& y) {
  if (x.size() != alg.total_rank || y.size() != alg.total_rank)
    throw validation_error("inner: vector length does not match rank " +
                           std::to_string(alg.total_rank));
  long long acc = 0;
  for (Eigen::Index i = 0; i < alg.total_rank; ++i) {
    long long row = 0;
    for (Eigen::Index j = 0; j < alg.total_rank; ++j)
      row += static_cast<long long>(alg.quad_num(i, j)) * y[j];
    acc += x[i] * row;
  }
  return Rational(acc, alg.quad_den);
}

Weight conjugate(const SemisimpleAlgebra& alg, const Weight& w) {
  if (w.size() != alg.total_rank)
    throw validation_error("conjugate: weight length does not match rank");
  Weight out(alg.total_rank);
  for (Eigen::Index i = 0; i < alg.total_rank; ++i)
    out[alg.conjugation[static_cast<std::size_t>(i)]] = w[i];
  return out;
}

}  // namespace liebranch
