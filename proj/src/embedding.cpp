#include "liebranch/embedding.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liebranch {

Embedding make_embedding(const std::string& name, const SemisimpleAlgebra& g,
                         const SemisimpleAlgebra& p, const IntMatrix& proj,
                         const std::string& notes) {
  if (proj.rows() != p.total_rank || proj.cols() != g.total_rank)
    throw validation_error("embedding '" + name + "': projection must be " +
                           std::to_string(p.total_rank) + "x" + std::to_string(g.total_rank) +
                           ", got " + std::to_string(proj.rows()) + "x" +
                           std::to_string(proj.cols()));
  return Embedding{name, g, p, proj, notes};
}

Embedding identity_embedding(const SemisimpleAlgebra& alg) {
  return Embedding{"identity-" + alg.name, alg, alg,
                   IntMatrix::Identity(alg.total_rank, alg.total_rank),
                   "identity map"};
}

Weight project(const Embedding& emb, const Weight& j) {
  if (j.size() != emb.g.total_rank)
    throw validation_error("project: weight length does not match rank of " + emb.g.name);
  return emb.proj * j;
}

RatMatrix pstar(const Embedding& emb) {
  return emb.g.quad_form_inv * emb.proj.cast<Rational>().transpose() * emb.p.quad_form;
}

namespace {

// Dynkin index of the multiset of weights {w}: sum of (w,w) over the
// multiset divided by twice the rank.
Rational index_of_projected(const Embedding& emb, const WeightSystem& ws) {
  Rational sum(0);
  for (const auto& [j, m] : ws.entries) {
    Weight pj = emb.proj * j;
    sum += Rational(m) * inner(emb.p, pj, pj);
  }
  return sum / Rational(2 * emb.p.total_rank);
}

Rational index_in_first_factor(const SemisimpleAlgebra& g, const WeightSystem& ws) {
  const int r1 = g.factors.front().rank;
  Rational sum(0);
  for (const auto& [j, m] : ws.entries) {
    Weight head = j.head(r1);
    long long acc = 0;
    for (int a = 0; a < r1; ++a)
      for (int b = 0; b < r1; ++b)
        acc += static_cast<long long>(g.quad_num(a, b)) * head[a] * head[b];
    sum += Rational(m) * Rational(acc, g.quad_den);
  }
  return sum / Rational(2 * r1);
}

}  // namespace

Rational embedding_index(const Embedding& emb, const Weight& probe) {
  WeightSystem ws = weight_system(emb.g, probe);
  Rational denom = index_in_first_factor(emb.g, ws);
  if (denom.is_zero())
    throw validation_error("embedding_index: probe is trivial on the first factor of " +
                           emb.g.name);
  return index_of_projected(emb, ws) / denom;
}

Rational embedding_index(const Embedding& emb) {
  Weight probe = Weight::Zero(emb.g.total_rank);
  probe[0] = 1;
  return embedding_index(emb, probe);
}

Embedding compose(const Embedding& emb_hp, const Embedding& emb_pg) {
  if (emb_hp.g.name != emb_pg.p.name)
    throw validation_error("compose: middle algebras differ (" + emb_hp.g.name + " vs " +
                           emb_pg.p.name + ")");
  return make_embedding(emb_hp.name + "*" + emb_pg.name, emb_pg.g, emb_hp.p,
                        emb_hp.proj * emb_pg.proj,
                        "composite of " + emb_hp.name + " and " + emb_pg.name);
}

namespace {

IntMatrix row_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

std::vector<Embedding> build_catalog() {
  std::vector<Embedding> list;
  SemisimpleAlgebra a1 = build_algebra("A1");
  SemisimpleAlgebra a2 = build_algebra("A2");
  SemisimpleAlgebra a4 = build_algebra("A4");
  SemisimpleAlgebra b2 = build_algebra("B2");
  SemisimpleAlgebra a1a1 = build_algebra("A1+A1");
  SemisimpleAlgebra a2a2 = build_algebra("A2+A2");

  list.push_back(make_embedding(
      "A1-in-A2-xe1", a2, a1, row_matrix({{1, 1}}),
      "sl2 inside sl3 acting as 2+1 on the defining representation"));
  list.push_back(make_embedding(
      "A1-in-A2-xe4", a2, a1, row_matrix({{2, 2}}),
      "principal sl2 of sl3; the defining representation restricts to the triplet"));
  list.push_back(make_embedding(
      "diag-A1", a1a1, a1, row_matrix({{1, 1}}),
      "diagonal subalgebra; branching gives tensor product multiplicities"));
  list.push_back(make_embedding(
      "diag-A2", a2a2, a2, row_matrix({{1, 0, 1, 0}, {0, 1, 0, 1}}),
      "diagonal subalgebra; branching gives tensor product multiplicities"));
  list.push_back(make_embedding(
      "B1-in-A2", a2, a1, row_matrix({{2, 2}}),
      "rank-1 member of the so(2n+1) in sl(2n+1) family; coincides with the "
      "principal sl2"));
  list.push_back(make_embedding(
      "B2-in-A4", a4, b2, row_matrix({{1, 0, 0, 1}, {0, 2, 2, 0}}),
      "so(5) inside sl5, fixed points of the diagram involution; the defining "
      "representation restricts to the vector"));
  return list;
}

}  // namespace

const std::vector<Embedding>& catalog() {
  static const std::vector<Embedding> list = build_catalog();
  return list;
}

const Embedding& catalog_lookup(const std::string& name) {
  for (const Embedding& e : catalog())
    if (e.name == name) return e;
  std::string known;
  for (const Embedding& e : catalog()) {
    if (!known.empty()) known += ", ";
    known += e.name;
  }
  throw validation_error("unknown catalog embedding '" + name + "' (known: " + known + ")");
}

Embedding embedding_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("embedding file is not valid JSON: ") + e.what());
  }
  for (const char* key : {"name", "g", "p", "P"})
    if (!j.contains(key))
      throw validation_error(std::string("embedding file is missing key '") + key + "'");

  SemisimpleAlgebra g = build_algebra(j["g"].get<std::string>());
  SemisimpleAlgebra p = build_algebra(j["p"].get<std::string>());
  const auto& rows = j["P"];
  if (!rows.is_array() || rows.empty())
    throw validation_error("embedding key 'P' must be a non-empty array of rows");
  IntMatrix proj(static_cast<Eigen::Index>(rows.size()), g.total_rank);
  for (Eigen::Index r = 0; r < proj.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != g.total_rank)
      throw validation_error("row " + std::to_string(r) + " of 'P' must have " +
                             std::to_string(g.total_rank) + " entries");
    for (Eigen::Index c = 0; c < proj.cols(); ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number_integer())
        throw validation_error("entry (" + std::to_string(r) + "," + std::to_string(c) +
                               ") of 'P' must be an integer; rational projections are "
                               "not supported");
      proj(r, c) = v.get<int>();
    }
  }
  return make_embedding(j["name"].get<std::string>(), g, p, proj, "user-supplied");
}

Embedding load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open embedding file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return embedding_from_json_text(buf.str());
}

}  // namespace liebranch
