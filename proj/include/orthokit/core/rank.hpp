#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orthokit/core/dacey.hpp"
#include "orthokit/core/orthoset.hpp"
#include "orthokit/lattice/ortho_lattice.hpp"

namespace orthokit {

// Greedy least-index maximal ⊥-set among the proper elements of `within`.
inline Subset maximal_perp_set(const FiniteOrthoset& X, Subset within) {
  Subset D;
  within.proper().for_each([&](std::size_t x) {
    if (D.subset_of(X.row(x))) D.insert(x);
  });
  return D;
}

namespace detail {

inline void grow_clique(const FiniteOrthoset& X, Subset R, Subset P, Subset& best) {
  if (R.size() + P.size() <= best.size()) return;
  if (P.empty()) {
    best = R;
    return;
  }
  while (!P.empty()) {
    if (R.size() + P.size() <= best.size()) return;
    const std::size_t v = P.first();
    P.erase(v);
    Subset Rv = R;
    Rv.insert(v);
    grow_clique(X, Rv, P & X.row(v), best);
  }
  if (R.size() > best.size()) best = R;
}

}  // namespace detail

// Largest ⊥-set by branch and bound; least-index among the first found maxima.
inline Subset maximum_perp_set(const FiniteOrthoset& X) {
  Subset best;
  detail::grow_clique(X, Subset{}, X.full().proper(), best);
  return best;
}

enum class RankMethod { greedy, exact_clique };

inline const char* to_string(RankMethod m) { return m == RankMethod::greedy ? "greedy" : "exact-clique"; }

struct RankResult {
  std::size_t value = 0;
  RankMethod method = RankMethod::exact_clique;
};

// Greedy growth is only sound on atomistic Dacey spaces with the covering
// property, so those are verified first; anything else uses the exact search.
inline bool greedy_rank_applies(const FiniteOrthoset& X, const Limits& limits = {}) {
  if (!is_atomistic(X)) return false;
  try {
    const OrthoLattice L(X, limits);
    return is_orthomodular(L) && has_covering_property(L);
  } catch (const bound_exceeded&) {
    return false;
  }
}

inline RankResult rank(const FiniteOrthoset& X, const Limits& limits = {}) {
  if (greedy_rank_applies(X, limits)) return {maximal_perp_set(X, X.full()).size(), RankMethod::greedy};
  return {maximum_perp_set(X).size(), RankMethod::exact_clique};
}

inline bool is_singleton(const FiniteOrthoset& X, const Limits& limits = {}) { return rank(X, limits).value == 1; }

struct Decomposition {
  std::vector<Subset> parts;
};

inline bool is_decomposition(const FiniteOrthoset& X, const std::vector<Subset>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_orthoclosed(X, parts[i])) return false;
    Subset others;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) others |= parts[j];
    if (ortho_complement(X, closure(X, others)) != parts[i]) return false;
  }
  return true;
}

inline Decomposition split_by_rank(const FiniteOrthoset& X, std::size_t n1, std::size_t n2,
                                   const Limits& limits = {}) {
  if (!greedy_rank_applies(X, limits))
    throw precondition_failed("split_by_rank needs an atomistic Dacey orthoset with the covering property");
  const auto D = maximal_perp_set(X, X.full()).elements();
  if (D.size() != n1 + n2)
    throw precondition_failed("rank is " + std::to_string(D.size()) + ", not " + std::to_string(n1 + n2));
  Subset D1, D2;
  for (std::size_t k = 0; k < D.size(); ++k) (k < n1 ? D1 : D2).insert(D[k]);
  Decomposition out{{closure(X, D1), closure(X, D2)}};
  if (!is_decomposition(X, out.parts)) throw precondition_failed("split did not produce a decomposition");
  return out;
}

// Complementary subspaces A, B, both with proper elements, covering X.
inline bool is_reducible(const FiniteOrthoset& X, const Limits& limits = {}) {
  for (Subset A : enumerate_orthoclosed(X, limits)) {
    const Subset B = ortho_complement(X, A);
    if (!A.proper().empty() && !B.proper().empty() && (A | B) == X.full()) return true;
  }
  return false;
}

}  // namespace orthokit
