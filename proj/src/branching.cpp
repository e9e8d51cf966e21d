#include "liebranch/branching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace liebranch {

namespace {

constexpr double kClosedTol = 1e-6;

void check_source(const Embedding& emb, const Weight& i) {
  if (i.size() != emb.g.total_rank)
    throw validation_error("branching source has " + std::to_string(i.size()) +
                           " labels; " + emb.g.name + " needs " +
                           std::to_string(emb.g.total_rank));
  if (!is_dominant(i))
    throw validation_error("branching source " + format_weight(i) + " is not dominant");
}

void sort_entries(const SemisimpleAlgebra& p,
                  std::vector<std::pair<Weight, long long>>& entries) {
  std::sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
    long long la = level_total(p, a.first), lb = level_total(p, b.first);
    if (la != lb) return la > lb;
    return WeightLess{}(a.first, b.first);
  });
}

BranchingTable collect(const Embedding& emb, const Weight& i, BranchMethod method,
                       std::unordered_map<Weight, long long, WeightHash, WeightEq>& acc,
                       double residual = 0.0) {
  BranchingTable table;
  table.embedding_name = emb.name;
  table.source = i;
  table.method = method;
  table.residual = residual;
  for (const auto& [a, b] : acc) {
    if (b < 0)
      throw embedding_error("negative branching coefficient " + std::to_string(b) + " at " +
                            format_weight(a) + "; the projection matrix of '" + emb.name +
                            "' does not describe an embedding");
    if (b > 0) table.entries.emplace_back(a, b);
  }
  sort_entries(emb.p, table.entries);
  return table;
}

}  // namespace

const char* method_name(BranchMethod m) {
  switch (m) {
    case BranchMethod::closed: return "closed";
    case BranchMethod::racah_speiser: return "rs";
    case BranchMethod::oracle: return "oracle";
  }
  return "?";
}

long long BranchingTable::coefficient(const Weight& a) const {
  for (const auto& [w, b] : entries)
    if (w == a) return b;
  return 0;
}

bool BranchingTable::same_entries(const BranchingTable& other) const {
  return entries == other.entries;
}

LevelVector level_bound(const Embedding& emb, const Weight& i) {
  check_source(emb, i);
  WeightSystem ws = weight_system(emb.g, i);
  LevelVector bound(static_cast<std::size_t>(emb.p.num_factors()), 0);
  for (const auto& [j, m] : ws.entries) {
    Weight pj = emb.proj * j;
    LevelVector lv = level_of(emb.p, pj);
    for (std::size_t s = 0; s < bound.size(); ++s) bound[s] = std::max(bound[s], lv[s]);
  }
  return bound;
}

BranchingTable branch_rs(const Embedding& emb, const Weight& i) {
  check_source(emb, i);
  WeightSystem ws = weight_system(emb.g, i);
  std::unordered_map<Weight, long long, WeightHash, WeightEq> acc;
  for (const auto& [j, m] : ws.entries) {
    Weight z = emb.proj * j + emb.p.rho;
    DominantResult dr = to_dominant(emb.p, std::move(z));
    if (dr.on_boundary) continue;
    acc[dr.weight - emb.p.rho] += dr.sign * m;
  }
  return collect(emb, i, BranchMethod::racah_speiser, acc);
}

BranchingTable branch_closed(const Embedding& emb, const Weight& i,
                             std::optional<LevelVector> k_opt) {
  check_source(emb, i);
  const LevelVector bound = level_bound(emb, i);
  LevelVector k = k_opt.value_or(bound);
  if (k.size() != bound.size())
    throw validation_error("level vector needs one entry per simple factor of " + emb.p.name);
  for (std::size_t s = 0; s < k.size(); ++s)
    if (k[s] < bound[s])
      throw validation_error("level " + std::to_string(k[s]) + " in factor " +
                             std::to_string(s + 1) + " is below the level bound " +
                             std::to_string(bound[s]) + " of " + format_weight(i));

  const SMatrixTable table = s_matrix(emb.p, k);
  const WeightSystem ws = weight_system(emb.g, i);
  const Eigen::Index n = table.s.rows();
  const Eigen::Index zero = table.index_of(Weight::Zero(emb.p.total_rank));

  // chi_i at the evaluation point of d equals the sum over the projected
  // weight system of exp(-2 pi i (Pj, d+rho)_p / (k+gv)), blockwise per
  // factor. All exponents are rationals over one common denominator, so
  // the phases come from a single precomputed table.
  long long common = 1;
  std::vector<long long> factor_den(static_cast<std::size_t>(emb.p.num_factors()));
  for (int s = 0; s < emb.p.num_factors(); ++s) {
    const SimpleAlgebra& f = emb.p.factors[static_cast<std::size_t>(s)];
    factor_den[static_cast<std::size_t>(s)] =
        f.quad_den * (k[static_cast<std::size_t>(s)] + f.dual_coxeter);
    common = std::lcm(common, factor_den[static_cast<std::size_t>(s)]);
  }
  std::vector<Complex> unit(static_cast<std::size_t>(common));
  for (long long r = 0; r < common; ++r) {
    const double arg = -2.0 * M_PI * static_cast<double>(r) / static_cast<double>(common);
    unit[static_cast<std::size_t>(r)] = Complex(std::cos(arg), std::sin(arg));
  }

  // Row vector per weight-system entry: q(j,d) = row_j . (d+rho) / common.
  const Eigen::Index pr = emb.p.total_rank;
  std::vector<std::vector<long long>> rows;
  std::vector<long long> mults;
  rows.reserve(ws.entries.size());
  for (const auto& [j, m] : ws.entries) {
    Weight pj = emb.proj * j;
    std::vector<long long> row(static_cast<std::size_t>(pr), 0);
    for (int s = 0; s < emb.p.num_factors(); ++s) {
      const SimpleAlgebra& f = emb.p.factors[static_cast<std::size_t>(s)];
      const int off = emb.p.offsets[static_cast<std::size_t>(s)];
      const long long scale = common / factor_den[static_cast<std::size_t>(s)];
      for (int t = 0; t < f.rank; ++t) {
        long long acc = 0;
        for (int u = 0; u < f.rank; ++u)
          acc += static_cast<long long>(f.quad_num(t, u)) * pj[off + u];
        row[static_cast<std::size_t>(off + t)] = scale * acc;
      }
    }
    rows.push_back(std::move(row));
    mults.push_back(m);
  }

  Eigen::VectorXcd chi(n);
  for (Eigen::Index d = 0; d < n; ++d) {
    const Weight shifted = table.weights[static_cast<std::size_t>(d)] + emb.p.rho;
    Complex sum(0.0, 0.0);
    for (std::size_t e = 0; e < rows.size(); ++e) {
      long long num = 0;
      for (Eigen::Index t = 0; t < pr; ++t) num += rows[e][static_cast<std::size_t>(t)] * shifted[t];
      num %= common;
      if (num < 0) num += common;
      sum += static_cast<double>(mults[e]) * unit[static_cast<std::size_t>(num)];
    }
    chi[d] = sum;
  }

  std::unordered_map<Weight, long long, WeightHash, WeightEq> acc;
  double residual = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    Complex sum(0.0, 0.0);
    for (Eigen::Index d = 0; d < n; ++d)
      sum += std::conj(table.s(d, a)) * table.s(d, zero) * chi[d];
    const double rounded = std::round(sum.real());
    residual = std::max({residual, std::abs(sum.imag()), std::abs(sum.real() - rounded)});
    if (rounded != 0.0)
      acc[table.weights[static_cast<std::size_t>(a)]] = static_cast<long long>(rounded);
  }
  if (residual > kClosedTol)
    throw numeric_error("closed branching formula residual " + std::to_string(residual) +
                        " exceeds tolerance for " + format_weight(i));
  return collect(emb, i, BranchMethod::closed, acc, residual);
}

BranchingTable branch_oracle(const Embedding& emb, const Weight& i) {
  check_source(emb, i);
  WeightSystem ws = weight_system(emb.g, i);

  std::unordered_map<Weight, long long, WeightHash, WeightEq> remaining;
  long long outstanding = 0;
  for (const auto& [j, m] : ws.entries) {
    remaining[emb.proj * j] += m;
    outstanding += m;
  }

  // Strict total order under which the maximal element of a sum of weight
  // systems is always a highest weight: level, then rho-height, then labels.
  auto precedes = [&](const Weight& x, const Weight& y) {
    long long lx = level_total(emb.p, x), ly = level_total(emb.p, y);
    if (lx != ly) return lx < ly;
    Rational hx = inner(emb.p, emb.p.rho, x), hy = inner(emb.p, emb.p.rho, y);
    if (hx != hy) return hx < hy;
    return WeightLess{}(x, y);
  };

  std::unordered_map<Weight, long long, WeightHash, WeightEq> acc;
  while (outstanding > 0) {
    const Weight* top = nullptr;
    for (const auto& [w, m] : remaining) {
      if (m == 0) continue;
      if (!top || precedes(*top, w)) top = &w;
    }
    Weight head = *top;
    long long count = remaining.at(head);
    if (!is_dominant(head) || count < 0)
      throw embedding_error("projected multiset of '" + emb.name +
                            "' cannot be peeled into irreducibles at " + format_weight(head));
    for (const auto& [w, m] : weight_system(emb.p, head).entries) {
      auto it = remaining.find(w);
      long long need = count * m;
      if (it == remaining.end() || it->second < need)
        throw embedding_error("projected multiset of '" + emb.name +
                              "' is short of weight " + format_weight(w));
      it->second -= need;
      outstanding -= need;
    }
    acc[head] += count;
  }
  return collect(emb, i, BranchMethod::oracle, acc);
}

BranchingTable branch(const Embedding& emb, const Weight& i, BranchMethod method,
                      std::optional<LevelVector> k) {
  switch (method) {
    case BranchMethod::closed: return branch_closed(emb, i, std::move(k));
    case BranchMethod::racah_speiser: return branch_rs(emb, i);
    case BranchMethod::oracle: return branch_oracle(emb, i);
  }
  throw validation_error("unknown branching method");
}

BranchingTable tensor_product(const SemisimpleAlgebra& alg, const Weight& i, const Weight& j) {
  SemisimpleAlgebra doubled = build_algebra(alg.name + "+" + alg.name);
  IntMatrix proj(alg.total_rank, 2 * alg.total_rank);
  proj << IntMatrix::Identity(alg.total_rank, alg.total_rank),
      IntMatrix::Identity(alg.total_rank, alg.total_rank);
  Embedding diag = make_embedding("diag-" + alg.name, doubled, alg, proj);
  Weight source(2 * alg.total_rank);
  source << i, j;
  return branch_rs(diag, source);
}

}  // namespace liebranch
