#include "liebranch/weyl.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <deque>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace liebranch {

namespace {

constexpr long long kReflectionCap = 1000000;

void check_rank(const SemisimpleAlgebra& alg, const Weight& w, const char* who) {
  if (w.size() != alg.total_rank)
    throw validation_error(std::string(who) + ": weight length does not match rank " +
                           std::to_string(alg.total_rank));
}

}  // namespace

DominantResult to_dominant(const SemisimpleAlgebra& alg, Weight w) {
  check_rank(alg, w, "to_dominant");
  DominantResult res;
  long long steps = 0;
  for (;;) {
    Eigen::Index neg = -1;
    for (Eigen::Index i = 0; i < w.size(); ++i)
      if (w[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    w -= w[neg] * Weight(alg.cartan.row(neg).transpose());
    res.sign = -res.sign;
    if (++steps > kReflectionCap)
      throw error("to_dominant: reflection loop exceeded step cap");
  }
  res.on_boundary = (w.array() == 0).any();
  res.weight = std::move(w);
  return res;
}

Weight dominant_representative(const SemisimpleAlgebra& alg, Weight w) {
  return to_dominant(alg, std::move(w)).weight;
}

std::vector<Weight> weyl_orbit(const SemisimpleAlgebra& alg, const Weight& w) {
  check_rank(alg, w, "weyl_orbit");
  if (!is_dominant(w)) throw validation_error("weyl_orbit: weight must be dominant");
  std::unordered_set<Weight, WeightHash, WeightEq> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (Eigen::Index i = 0; i < alg.total_rank; ++i) {
      if (cur[i] == 0) continue;
      Weight next = cur - cur[i] * Weight(alg.cartan.row(i).transpose());
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Weight> orbit(seen.begin(), seen.end());
  std::sort(orbit.begin(), orbit.end(), WeightLess{});
  return orbit;
}

long long dimension(const SemisimpleAlgebra& alg, const Weight& highest) {
  check_rank(alg, highest, "dimension");
  if (!is_dominant(highest)) throw validation_error("dimension: weight must be dominant");
  Weight shifted = highest + alg.rho;
  Rational dim(1);
  for (const Weight& alpha : alg.positive_roots)
    dim *= inner(alg, shifted, alpha) / inner(alg, alg.rho, alpha);
  if (!dim.is_integer())
    throw error("internal: Weyl dimension formula produced a non-integer");
  return dim.num();
}

void WeightSystem::finalize() {
  index_.clear();
  index_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) index_.emplace(entries[i].first, i);
}

namespace {

WeightSystem compute_weight_system(const SemisimpleAlgebra& alg, const Weight& highest);

// Consecutive calls often revisit the same module (several branching
// methods over one source), so keep a handful of recent systems around.
class SystemCache {
public:
  std::shared_ptr<const WeightSystem> get(const SemisimpleAlgebra& alg, const Weight& highest) {
    std::string key = alg.name;
    for (Eigen::Index i = 0; i < highest.size(); ++i) {
      key += ',';
      key += std::to_string(highest[i]);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto it = items_.begin(); it != items_.end(); ++it) {
      if (it->first == key) {
        items_.splice(items_.begin(), items_, it);
        return items_.front().second;
      }
    }
    auto value = std::make_shared<const WeightSystem>(compute_weight_system(alg, highest));
    items_.emplace_front(std::move(key), value);
    if (items_.size() > 16) items_.pop_back();
    return value;
  }

private:
  std::mutex mutex_;
  std::list<std::pair<std::string, std::shared_ptr<const WeightSystem>>> items_;
};

SystemCache g_system_cache;

}  // namespace

WeightSystem weight_system(const SemisimpleAlgebra& alg, const Weight& highest) {
  check_rank(alg, highest, "weight_system");
  if (!is_dominant(highest)) throw validation_error("weight_system: weight must be dominant");
  return *g_system_cache.get(alg, highest);
}

namespace {

WeightSystem compute_weight_system(const SemisimpleAlgebra& alg, const Weight& highest) {

  // A lattice point x in highest+Q belongs to the weight polytope iff its
  // dominant representative sits below the highest weight in the root
  // lattice. The BFS below therefore enumerates exactly the support, and
  // stays connected through it because every weight reaches the top along
  // a chain of weights.
  const RatMatrix root_coords =
      RatMatrix(alg.cartan.cast<Rational>().inverse()).transpose();
  auto in_polytope = [&](const Weight& x) {
    RatVector delta = to_rational(highest - dominant_representative(alg, x));
    RatVector c = root_coords * delta;
    for (Eigen::Index t = 0; t < c.size(); ++t)
      if (c[t] < Rational(0)) return false;
    return true;
  };

  std::unordered_map<Weight, long long, WeightHash, WeightEq> depth;
  depth.emplace(highest, 0);
  std::deque<Weight> queue{highest};
  std::vector<std::pair<Weight, long long>> dominant_points{{highest, 0}};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    const long long d = depth[cur];
    for (Eigen::Index i = 0; i < alg.total_rank; ++i) {
      Weight next = cur - Weight(alg.cartan.row(i).transpose());
      if (depth.count(next)) continue;
      if (!in_polytope(next)) continue;
      depth.emplace(next, d + 1);
      if (is_dominant(next)) dominant_points.emplace_back(next, d + 1);
      queue.push_back(next);
    }
  }
  std::sort(dominant_points.begin(), dominant_points.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second < b.second;
              return WeightLess{}(b.first, a.first);
            });

  const Weight shifted_top = highest + alg.rho;
  const Rational top_norm = inner(alg, shifted_top, shifted_top);

  std::unordered_map<Weight, long long, WeightHash, WeightEq> mult;
  mult.emplace(highest, 1);
  for (std::size_t idx = 1; idx < dominant_points.size(); ++idx) {
    const Weight& mu = dominant_points[idx].first;
    const long long mu_depth = dominant_points[idx].second;
    Rational sum(0);
    for (std::size_t r = 0; r < alg.positive_roots.size(); ++r) {
      const Weight& alpha = alg.positive_roots[r];
      const long long step = alg.positive_root_heights[r];
      Weight nu = mu;
      for (long long t = 1; t * step <= mu_depth; ++t) {
        nu += alpha;
        // Multiplicities already known: nu sits strictly above mu.
        long long m = 0;
        auto it = mult.find(dominant_representative(alg, nu));
        if (it != mult.end()) m = it->second;
        if (m > 0) sum += Rational(m) * inner(alg, nu, alpha);
      }
    }
    Weight shifted = mu + alg.rho;
    Rational denom = top_norm - inner(alg, shifted, shifted);
    Rational value = Rational(2) * sum / denom;
    // Every enumerated dominant point is a weight, so the multiplicity must
    // come out a positive integer.
    if (!value.is_integer() || value.num() <= 0)
      throw error("internal: Freudenthal recursion produced an invalid multiplicity");
    mult.emplace(mu, value.num());
  }

  WeightSystem ws;
  ws.highest = highest;
  for (const auto& [mu, m] : mult) {
    for (const Weight& w : weyl_orbit(alg, mu)) ws.entries.emplace_back(w, m);
  }
  // Grade = depth below the highest weight, recovered from the recorded BFS.
  std::sort(ws.entries.begin(), ws.entries.end(),
            [&](const auto& a, const auto& b) {
              long long da = depth.at(a.first), db = depth.at(b.first);
              if (da != db) return da < db;
              return WeightLess{}(b.first, a.first);
            });
  ws.dim = 0;
  for (const auto& e : ws.entries) ws.dim += e.second;
  ws.finalize();
  return ws;
}

}  // namespace

}  // namespace liebranch
