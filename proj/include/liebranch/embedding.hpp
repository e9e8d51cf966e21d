#pragma once

#include <string>
#include <vector>

#include "liebranch/algebra.hpp"
#include "liebranch/weyl.hpp"

namespace liebranch {

/// A subalgebra embedding p -> g described by the integer projection matrix
/// acting on Dynkin labels (rows indexed by p-nodes, columns by g-nodes).
struct Embedding {
  std::string name;
  SemisimpleAlgebra g;
  SemisimpleAlgebra p;
  IntMatrix proj;  // rank(p) x rank(g)
  std::string notes;
};

Embedding make_embedding(const std::string& name, const SemisimpleAlgebra& g,
                         const SemisimpleAlgebra& p, const IntMatrix& proj,
                         const std::string& notes = "");

Embedding identity_embedding(const SemisimpleAlgebra& alg);

Weight project(const Embedding& emb, const Weight& j);

/// Adjoint map P* = F_g^{-1} P^T F_p, exact; (Pj, c)_p = (j, P* c)_g.
RatMatrix pstar(const Embedding& emb);

/// Embedding index: Dynkin index of the restriction of a probe
/// representation over the index of the probe itself, the latter taken with
/// respect to the first simple factor of g. The probe defaults to the first
/// fundamental weight of that factor; the result is probe-independent.
Rational embedding_index(const Embedding& emb);
Rational embedding_index(const Embedding& emb, const Weight& probe);

/// Composite of h -> p and p -> g; the middle algebras must agree.
Embedding compose(const Embedding& emb_hp, const Embedding& emb_pg);

const std::vector<Embedding>& catalog();
const Embedding& catalog_lookup(const std::string& name);

/// JSON schema: { "name": str, "g": "<spec>", "p": "<spec>", "P": [[int,..],..] }.
Embedding embedding_from_json_text(const std::string& text);
Embedding load_embedding(const std::string& path);

}  // namespace liebranch
