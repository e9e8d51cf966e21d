// Acceptance suite: one line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "liebranch/nimrep.hpp"
#include "liebranch/quadrature.hpp"

using namespace liebranch;

namespace {

Weight w(std::initializer_list<int> labels) {
  Weight out(static_cast<Eigen::Index>(labels.size()));
  Eigen::Index i = 0;
  for (int v : labels) out[i++] = v;
  return out;
}

std::vector<Weight> dominant_up_to_dim(const SemisimpleAlgebra& alg, long long maxdim) {
  std::vector<Weight> out;
  Weight cur = Weight::Zero(alg.total_rank);
  std::function<void(Eigen::Index)> rec = [&](Eigen::Index t) {
    if (t == alg.total_rank) {
      out.push_back(cur);
      return;
    }
    for (int v = 0;; ++v) {
      cur[t] = v;
      if (dimension(alg, cur) > maxdim) break;
      rec(t + 1);
    }
    cur[t] = 0;
  };
  rec(0);
  return out;
}

struct Harness {
  int failures = 0;

  void criterion(int id, const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    bool pass = false;
    try {
      detail = body();
      pass = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  " << id << "  " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
  }
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

// Shared sweep result so criteria 1 and 2 run the tables once.
struct SweepData {
  long long tables = 0;
  double seconds = 0.0;
  bool dim_ok = true;
  std::string dim_detail;
};

SweepData sweep;

std::string run_sweep() {
  const auto start = std::chrono::steady_clock::now();
  for (const Embedding& emb : catalog()) {
    for (const Weight& i : dominant_up_to_dim(emb.g, 500)) {
      BranchingTable rs = branch_rs(emb, i);
      BranchingTable closed = branch_closed(emb, i);
      BranchingTable oracle = branch_oracle(emb, i);
      require(rs.same_entries(closed) && rs.same_entries(oracle),
              emb.name + " methods disagree at i=" + format_weight(i));
      long long total = 0;
      for (const auto& [a, b] : rs.entries) total += b * dimension(emb.p, a);
      if (total != dimension(emb.g, i)) {
        sweep.dim_ok = false;
        sweep.dim_detail = emb.name + " at i=" + format_weight(i);
      }
      ++sweep.tables;
    }
  }
  sweep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(sweep.seconds < 60.0, "sweep exceeded 60 s");
  std::ostringstream os;
  os << sweep.tables << " tables x 3 methods, " << catalog().size() << " embeddings, "
     << std::fixed;
  os.precision(1);
  os << sweep.seconds << " s";
  return os.str();
}

std::string run_dimension_check() {
  require(sweep.tables > 0, "sweep did not run");
  require(sweep.dim_ok, "dimension mismatch at " + sweep.dim_detail);
  return "sum b_i^a dim(a) = dim(i) on all " + std::to_string(sweep.tables) + " tables";
}

std::string run_corollary_suite() {
  const Embedding& xe1 = catalog_lookup("A1-in-A2-xe1");
  const SemisimpleAlgebra a2 = build_algebra("A2");
  const SemisimpleAlgebra a1 = build_algebra("A1");

  // Chain A1 -> A1+A1 -> A2+A2 built from the diagonal and the doubled
  // index-one embedding.
  const Embedding& diag = catalog_lookup("diag-A1");
  IntMatrix block(2, 4);
  block << 1, 1, 0, 0, 0, 0, 1, 1;
  Embedding doubled =
      make_embedding("xe1-doubled", build_algebra("A2+A2"), build_algebra("A1+A1"), block);
  Embedding chain = compose(diag, doubled);

  // (1) trivial representation.
  for (const Embedding* emb :
       std::initializer_list<const Embedding*>{&xe1, &doubled, &chain}) {
    BranchingTable t = branch_rs(*emb, Weight::Zero(emb->g.total_rank));
    require(t.entries.size() == 1 &&
                t.coefficient(Weight::Zero(emb->p.total_rank)) == 1,
            "trivial representation fails on " + emb->name);
  }

  const std::vector<Weight> small = dominant_up_to_dim(a2, 100);

  // (2) conjugation.
  for (const Weight& i : small) {
    BranchingTable t = branch_rs(xe1, i);
    BranchingTable tc = branch_rs(xe1, conjugate(xe1.g, i));
    for (const auto& [a, b] : t.entries)
      require(tc.coefficient(conjugate(xe1.p, a)) == b,
              "conjugation fails on xe1 at i=" + format_weight(i));
  }

  // (3) transitivity along the chain, over products of small weights.
  long long chain_checks = 0;
  for (const Weight& i1 : small) {
    for (const Weight& i2 : small) {
      if (dimension(a2, i1) * dimension(a2, i2) > 100) continue;
      Weight i(4);
      i << i1, i2;
      BranchingTable direct = branch_rs(chain, i);
      BranchingTable through = branch_rs(doubled, i);
      std::map<std::vector<int>, long long> expect;
      for (const auto& [a, b] : through.entries) {
        for (const auto& [alpha, c] : branch_rs(diag, a).entries)
          expect[{alpha[0]}] += b * c;
      }
      for (const auto& [alpha, b] : direct.entries) {
        require(expect[{alpha[0]}] == b, "transitivity fails at i=" + format_weight(i));
        expect.erase({alpha[0]});
      }
      for (const auto& [alpha, b] : expect)
        require(b == 0, "transitivity leaves an extra coefficient");
      ++chain_checks;

      // conjugation on the chain as well
      BranchingTable tc = branch_rs(chain, conjugate(chain.g, i));
      for (const auto& [a, b] : direct.entries)
        require(tc.coefficient(a) == b, "conjugation fails on the chain");
    }
  }

  // (4) both tensor reductions agree; fusion rules from the S-matrix at a
  // level above both truncation thresholds.
  long long pair_checks = 0;
  {
    long long max_level = 0;
    for (const Weight& i : small) max_level = std::max(max_level, level_total(a2, i));
    SMatrixTable sg = s_matrix(a2, {2 * max_level});
    const Eigen::Index n = sg.s.rows();
    const Eigen::Index zero = sg.index_of(w({0, 0}));

    long long max_bound = 0;
    std::map<std::vector<int>, BranchingTable> branch_cache;
    auto branch_of = [&](const Weight& l) -> const BranchingTable& {
      std::vector<int> key{l[0], l[1]};
      auto it = branch_cache.find(key);
      if (it == branch_cache.end())
        it = branch_cache.emplace(key, branch_rs(xe1, l)).first;
      return it->second;
    };
    for (const Weight& i : small)
      max_bound = std::max(max_bound, level_bound(xe1, i)[0]);
    SMatrixTable sp = s_matrix(a1, {2 * max_bound});

    for (std::size_t ii = 0; ii < small.size(); ++ii) {
      const Weight& i = small[ii];
      // All fusion rules N_i* in one dense product.
      Eigen::VectorXcd ratio(n);
      for (Eigen::Index m = 0; m < n; ++m)
        ratio[m] = sg.s(m, sg.index_of(i)) / sg.s(m, zero);
      Eigen::MatrixXcd fusion = sg.s.transpose() * ratio.asDiagonal() * sg.s.conjugate();

      for (std::size_t jj = ii; jj < small.size(); ++jj) {
        const Weight& j = small[jj];
        const BranchingTable bi = branch_rs(xe1, i);
        const BranchingTable bj = branch_rs(xe1, j);
        const long long amax = level_bound(xe1, i)[0] + level_bound(xe1, j)[0];
        for (long long a = 0; a <= amax; ++a) {
          Weight aw = w({static_cast<int>(a)});
          long long lhs = 0;
          for (const Weight& l : sg.weights) {
            if (level_total(a2, l) > level_total(a2, i) + level_total(a2, j)) continue;
            const Complex v = fusion(sg.index_of(j), sg.index_of(l));
            const double rounded = std::round(v.real());
            require(std::abs(v.imag()) < 1e-6 && std::abs(v.real() - rounded) < 1e-6,
                    "fusion residual too large");
            if (rounded != 0.0)
              lhs += static_cast<long long>(rounded) * branch_of(l).coefficient(aw);
          }
          long long rhs = 0;
          for (const auto& [c, bc] : bi.entries)
            for (const auto& [d, bd] : bj.entries) rhs += bc * bd * verlinde(sp, c, d, aw);
          require(lhs == rhs, "tensor reduction mismatch at i=" + format_weight(i) +
                                  " j=" + format_weight(j) + " a=" + format_weight(aw));
        }
        ++pair_checks;
      }
    }
  }

  return std::to_string(small.size()) + " weights, " + std::to_string(chain_checks) +
         " chain points, " + std::to_string(pair_checks) + " tensor pairs";
}

std::string run_character_identity() {
  long long checks = 0;
  for (const char* name : {"A1-in-A2-xe1", "A1-in-A2-xe4"}) {
    const Embedding& emb = catalog_lookup(name);
    for (const Weight& i : {w({1, 0}), w({1, 1}), w({2, 1})}) {
      BranchingTable b = branch_rs(emb, i);
      LevelVector bound = level_bound(emb, i);
      for (long long extra : {0ll, 2ll}) {
        LevelVector k{bound[0] + extra};
        SMatrixTable table = s_matrix(emb.p, k);
        RatMatrix ps = pstar(emb);
        const Eigen::Index zero = table.index_of(w({0}));
        for (Eigen::Index d = 0; d < table.s.rows(); ++d) {
          Complex lhs(0.0, 0.0);
          for (const auto& [c, bc] : b.entries)
            lhs += static_cast<double>(bc) * table.s(d, table.index_of(c)) / table.s(d, zero);
          Complex rhs = character_direct(
              emb.g, i, ps * xi_point(emb.p, k, table.weights[static_cast<std::size_t>(d)]));
          require(std::abs(lhs - rhs) < 1e-8,
                  std::string("identity fails on ") + name + " at i=" + format_weight(i));
          ++checks;
        }
      }
    }
  }
  return std::to_string(checks) + " evaluation points below 1e-8";
}

std::string run_smatrix_checks() {
  auto a1 = build_algebra("A1");
  double worst_unitarity = 0.0;
  double worst_closed = 0.0;
  for (long long k = 0; k <= 30; ++k) {
    SMatrixTable t = s_matrix(a1, {k});
    worst_unitarity = std::max(worst_unitarity, t.unitarity_residual());
    for (Eigen::Index a = 0; a <= k; ++a)
      for (Eigen::Index b = 0; b <= k; ++b) {
        double closed = std::sqrt(2.0 / static_cast<double>(k + 2)) *
                        std::sin(M_PI * static_cast<double>((a + 1) * (b + 1)) /
                                 static_cast<double>(k + 2));
        worst_closed = std::max(worst_closed, std::abs(t.s(a, b) - Complex(closed, 0.0)));
      }
  }
  require(worst_closed < 1e-12, "closed-form deviation " + std::to_string(worst_closed));

  auto a2 = build_algebra("A2");
  for (long long k = 0; k <= 12; ++k)
    worst_unitarity = std::max(worst_unitarity, s_matrix(a2, {k}).unitarity_residual());
  auto b2 = build_algebra("B2");
  for (long long k = 0; k <= 10; ++k)
    worst_unitarity = std::max(worst_unitarity, s_matrix(b2, {k}).unitarity_residual());
  require(worst_unitarity < 1e-9, "unitarity residual " + std::to_string(worst_unitarity));
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << "unitarity " << worst_unitarity << ", closed form " << worst_closed;
  return os.str();
}

std::string run_verlinde_vs_tensor() {
  long long checks = 0;
  {
    auto a1 = build_algebra("A1");
    SMatrixTable t = s_matrix(a1, {10});
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        BranchingTable exact = tensor_product(a1, w({i}), w({j}));
        for (const Weight& l : t.weights) {
          require(verlinde(t, w({i}), w({j}), l) == exact.coefficient(l),
                  "A1 fusion/tensor mismatch");
          ++checks;
        }
      }
  }
  {
    auto a2 = build_algebra("A2");
    SMatrixTable t = s_matrix(a2, {8});
    auto low = integrable_weights(a2, {3});
    for (const Weight& i : low)
      for (const Weight& j : low) {
        BranchingTable exact = tensor_product(a2, i, j);
        for (const Weight& l : t.weights) {
          require(verlinde(t, i, j, l) == exact.coefficient(l), "A2 fusion/tensor mismatch");
          ++checks;
        }
      }
  }
  return std::to_string(checks) + " coefficients, residuals below 1e-6";
}

std::string run_integrals() {
  auto a1 = build_algebra("A1");
  SMatrixTable big = s_matrix(a1, {20});
  long long count = 0;
  double worst = 0.0;
  long long max_points = 0;
  double slowest = 0.0;
  for (int x = 0; x <= 8; ++x)
    for (int y = 0; y <= 8; ++y) {
      BranchingTable exact = tensor_product(a1, w({x}), w({y}));
      for (int a = 0; a <= x + y; ++a) {
        auto t0 = std::chrono::steady_clock::now();
        QuadratureResult q = integral_a1_tensor(x, y, a);
        slowest = std::max(
            slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count());
        require(q.points <= (1 << 16), "too many points");
        require(q.rounded == exact.coefficient(w({a})), "tensor integral mismatch");
        require(q.rounded == verlinde(big, w({x}), w({y}), w({a})), "integral/fusion mismatch");
        worst = std::max(worst, q.residual);
        max_points = std::max(max_points, q.points);
        ++count;
      }
    }
  const Embedding& xe1 = catalog_lookup("A1-in-A2-xe1");
  for (int i1 = 0; i1 <= 4; ++i1)
    for (int i2 = 0; i2 <= 4; ++i2) {
      BranchingTable exact = branch_rs(xe1, w({i1, i2}));
      for (int a = 0; a <= level_bound(xe1, w({i1, i2}))[0] + 1; ++a) {
        auto t0 = std::chrono::steady_clock::now();
        QuadratureResult q = integral_a1_in_a2(i1, i2, a);
        slowest = std::max(
            slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count());
        require(q.points <= (1 << 16), "too many points");
        require(q.rounded == exact.coefficient(w({a})), "subalgebra integral mismatch");
        worst = std::max(worst, q.residual);
        max_points = std::max(max_points, q.points);
        ++count;
      }
    }
  require(worst < 1e-4, "integral residual " + std::to_string(worst));
  require(slowest < 1.0, "an integral took " + std::to_string(slowest) + " s");
  std::ostringstream os;
  os.precision(2);
  os << count << " integrals, residual < " << std::scientific << worst << ", <= " << max_points
     << " points";
  return os.str();
}

std::string run_nim_axioms() {
  long long pairs = 0;
  std::size_t min_interior = 1000;
  for (const char* name : {"A1-in-A2-xe1", "A1-in-A2-xe4"}) {
    const Embedding& emb = catalog_lookup(name);
    for (const Weight& i : {w({1, 0}), w({0, 1}), w({1, 1})})
      for (const Weight& j : {w({1, 0}), w({0, 1}), w({1, 1})}) {
        LevelVector margin{std::max(level_bound(emb, i)[0], level_bound(emb, j)[0])};
        LevelVector cutoff{margin[0] + 9};
        NimCheckReport rep = verify_nim(emb, i, j, level_window(emb.p, cutoff), margin);
        require(rep.ok, std::string(name) + " axiom violation " +
                            std::to_string(rep.max_violation));
        require(rep.interior_size >= 8, "interior too small");
        min_interior = std::min(min_interior, rep.interior_size);
        ++pairs;
      }
  }
  return std::to_string(pairs) + " source pairs, interior >= " +
         std::to_string(min_interior) + ", exact integer equality";
}

std::string run_twisted() {
  const auto a2 = build_algebra("A2");
  const Embedding& xe1 = catalog_lookup("A1-in-A2-xe1");
  const Embedding& xe4 = catalog_lookup("A1-in-A2-xe4");
  long long entries = 0, matched = 0;
  double worst = 0.0;
  for (long long k : {4, 6, 8, 10, 12}) {
    for (const Weight& i : integrable_weights(a2, {k})) {
      if (dimension(a2, i) > 100) continue;
      for (long long t1 = 0; t1 <= k / 2; ++t1)
        for (long long t2 = 0; t2 <= k / 2; ++t2) {
          double res = 0.0;
          long long v =
              a2_nimrep_finite(k, i[0], i[1], TwistedLabel{t1, k}, TwistedLabel{t2, k}, &res);
          require(v >= 0, "negative twisted entry");
          worst = std::max(worst, res);
          ++entries;
        }

      if (k >= 2 * level_bound(xe1, i)[0]) {
        BranchingTable b = branch_rs(xe1, i);
        for (long long a = 0; a <= k / 2; ++a) {
          require(a2_nimrep_finite(k, i[0], i[1], psi(k, a), psi(k, 0)) ==
                      b.coefficient(w({static_cast<int>(a)})),
                  "psi row differs from the index-1 branching at k=" + std::to_string(k));
          ++matched;
        }
      }
      if (k >= 2 * level_bound(xe4, i)[0]) {
        BranchingTable b = branch_rs(xe4, i);
        for (long long a = 0; a <= k; a += 2) {
          require(a2_nimrep_finite(k, i[0], i[1], psi_prime(k, a), psi_prime(k, 0)) ==
                      b.coefficient(w({static_cast<int>(a)})),
                  "psi-prime row differs from the index-4 branching at k=" + std::to_string(k));
          ++matched;
        }
      }
    }
  }
  require(worst < 1e-6, "twisted residual " + std::to_string(worst));
  std::ostringstream os;
  os.precision(2);
  os << entries << " entries integer (residual < " << std::scientific << worst << "), "
     << matched << " branching matches";
  return os.str();
}

std::string run_b2_experiment() {
  const Embedding& emb = catalog_lookup("B2-in-A4");
  long long count = 0;
  for (const Weight& i : dominant_up_to_dim(emb.g, 500)) {
    require(branch_rs(emb, i).same_entries(branch_oracle(emb, i)),
            "disagreement at i=" + format_weight(i));
    ++count;
  }
  return "experiment log: full agreement on " + std::to_string(count) +
         " A4 representations of dim <= 500";
}

}  // namespace

int main() {
  Harness h;
  h.criterion(1, "three-way method agreement on the catalog (dim <= 500, < 60 s)", run_sweep);
  h.criterion(2, "dimension conservation on the same sweep", run_dimension_check);
  h.criterion(3, "branching properties: trivial, conjugation, transitivity, tensor reduction",
              run_corollary_suite);
  h.criterion(4, "character identity sum_c b_i^c S_dc/S_d0 = chi_i(P* xi_d) within 1e-8",
              run_character_identity);
  h.criterion(5, "S-matrix unitarity (1e-9) and the rank-1 closed form (1e-12)",
              run_smatrix_checks);
  h.criterion(6, "fusion coefficients reduce to tensor products (A1 k=10, A2 k=8)",
              run_verlinde_vs_tensor);
  h.criterion(7, "integral representations reproduce branching (residual < 1e-4)",
              run_integrals);
  h.criterion(8, "fusion-ring representation axioms hold exactly on interior windows",
              run_nim_axioms);
  h.criterion(9, "twisted boundary matrices: integer entries and both branching limits",
              run_twisted);
  h.criterion(10, "so(5) in sl(5) sweep agrees with the peel oracle (dim <= 500)",
              run_b2_experiment);
  std::cout << (h.failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: ")
            << (h.failures ? std::to_string(h.failures) : std::string()) << std::endl;
  return h.failures;
}
