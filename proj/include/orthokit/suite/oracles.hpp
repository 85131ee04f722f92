#pragma once

// Slow reference implementations used only by tests and the acceptance suite.
// Nothing in the library proper includes this file.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "orthokit/core/orthoset.hpp"
#include "orthokit/maps/ortho_map.hpp"

namespace orthokit::oracle {

// Elementwise orthocomplement, no bitmask rows.
inline std::vector<bool> perp_of(const FiniteOrthoset& X, const std::vector<bool>& A) {
  std::vector<bool> out(X.size(), false);
  for (std::size_t x = 0; x < X.size(); ++x) {
    bool ok = true;
    for (std::size_t a = 0; a < X.size() && ok; ++a)
      if (A[a] && !X.perp(x, a)) ok = false;
    out[x] = ok;
  }
  return out;
}

// Every subset A with A = A⊥⊥, by scanning the powerset.
inline std::vector<Subset> orthoclosed_by_powerset(const FiniteOrthoset& X) {
  std::vector<Subset> out;
  const std::size_t n = X.size();
  for (Subset::mask_type m = 0; m < (Subset::mask_type{1} << n); ++m) {
    std::vector<bool> A(n);
    for (std::size_t i = 0; i < n; ++i) A[i] = (m >> i) & 1U;
    if (perp_of(X, perp_of(X, A)) == A) out.push_back(Subset(m));
  }
  return out;
}

// Searches for an adjoint by trying every value for g(y) independently and
// checking the defining biconditional pointwise; least index wins.
inline std::optional<std::vector<std::size_t>> brute_force_adjoint(const FiniteOrthoset& X, const FiniteOrthoset& Y,
                                                                   const std::vector<std::size_t>& f) {
  std::vector<std::size_t> g(Y.size());
  for (std::size_t y = 0; y < Y.size(); ++y) {
    bool found = false;
    for (std::size_t z = 0; z < X.size() && !found; ++z) {
      bool ok = true;
      for (std::size_t x = 0; x < X.size() && ok; ++x) ok = Y.perp(f[x], y) == X.perp(x, z);
      if (ok) {
        g[y] = z;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return g;
}

// Counts adjoints over the full candidate space |X|^|Y|; only for tiny inputs.
inline std::size_t count_adjoints_exhaustive(const FiniteOrthoset& X, const FiniteOrthoset& Y,
                                             const std::vector<std::size_t>& f) {
  std::vector<std::size_t> g(Y.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < X.size() && ok; ++x)
      for (std::size_t y = 0; y < Y.size() && ok; ++y) ok = Y.perp(f[x], y) == X.perp(x, g[y]);
    if (ok) ++count;
    std::size_t k = 0;
    while (k < g.size() && ++g[k] == X.size()) g[k++] = 0;
    if (k == g.size()) break;
  }
  return count;
}

// All tables X -> Y (|Y|^|X| of them), in lexicographic order.
template <class F>
void for_each_table(std::size_t n_dom, std::size_t n_cod, F&& f) {
  std::vector<std::size_t> t(n_dom, 0);
  while (true) {
    f(t);
    std::size_t k = 0;
    while (k < t.size() && ++t[k] == n_cod) t[k++] = 0;
    if (k == t.size()) break;
  }
}

inline std::vector<FiniteOrthoset::Edge> proper_pairs(std::size_t n) {
  std::vector<FiniteOrthoset::Edge> out;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline FiniteOrthoset from_edge_mask(std::size_t n, std::uint64_t mask) {
  const auto pairs = proper_pairs(n);
  std::vector<FiniteOrthoset::Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1U) edges.push_back(pairs[k]);
  return FiniteOrthoset(n, edges);
}

// Every labelled orthoset on n elements (2^C(n-1,2) of them).
inline std::vector<FiniteOrthoset> all_labelled(std::size_t n) {
  const std::size_t m = proper_pairs(n).size();
  std::vector<FiniteOrthoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) out.push_back(from_edge_mask(n, mask));
  return out;
}

// One representative per isomorphism class: the labelling whose edge mask is
// least over all permutations of the proper elements.
inline std::vector<FiniteOrthoset> all_canonical(std::size_t n) {
  const auto pairs = proper_pairs(n);
  const std::size_t m = pairs.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < m; ++k) {
    pair_index[pairs[k].first][pairs[k].second] = k;
    pair_index[pairs[k].second][pairs[k].first] = k;
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));

  std::set<std::uint64_t> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t best = mask;
    for (const auto& q : perms) {
      std::uint64_t img = 0;
      for (std::size_t k = 0; k < m; ++k)
        if ((mask >> k) & 1U) img |= std::uint64_t{1} << pair_index[q[pairs[k].first]][q[pairs[k].second]];
      best = std::min(best, img);
      if (best < mask) break;
    }
    if (best == mask) reps.insert(mask);
  }
  std::vector<FiniteOrthoset> out;
  for (auto mask : reps) out.push_back(from_edge_mask(n, mask));
  return out;
}

inline FiniteOrthoset random_orthoset(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<FiniteOrthoset::Edge> edges;
  for (auto e : proper_pairs(n))
    if (coin(rng)) edges.push_back(e);
  return FiniteOrthoset(n, edges);
}

// Endomorphism tables of the form ι_A ∘ σ, where A ranges over C(X), ι_A is the
// inclusion and σ ranges over every Sasaki map (adjoint of ι_A fixing A).
inline std::set<std::vector<std::size_t>> projections_by_sasaki(const FiniteOrthoset& X) {
  std::set<std::vector<std::size_t>> out;
  for (Subset A : orthoclosed_by_powerset(X)) {
    const Restriction sub = restrict_to(X, A);
    const auto& iota = sub.embedding;
    // realizers[y]: every a in A with {x ∈ A : x ⊥ y} = {a}⊥ computed in A
    std::vector<std::vector<std::size_t>> realizers(X.size());
    for (std::size_t y = 0; y < X.size(); ++y)
      for (std::size_t a = 0; a < iota.size(); ++a) {
        bool ok = true;
        for (std::size_t x = 0; x < iota.size() && ok; ++x) ok = X.perp(iota[x], y) == sub.orthoset.perp(x, a);
        if (ok) realizers[y].push_back(a);
      }
    bool adjointable = true;
    for (const auto& r : realizers) adjointable = adjointable && !r.empty();
    if (!adjointable) continue;
    std::vector<std::size_t> pick(X.size(), 0);
    while (true) {
      std::vector<std::size_t> sigma(X.size());
      for (std::size_t y = 0; y < X.size(); ++y) sigma[y] = realizers[y][pick[y]];
      bool fixes = true;
      for (std::size_t a = 0; a < iota.size() && fixes; ++a) fixes = sigma[iota[a]] == a;
      if (fixes) {
        std::vector<std::size_t> p(X.size());
        for (std::size_t y = 0; y < X.size(); ++y) p[y] = iota[sigma[y]];
        out.insert(p);
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == realizers[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return out;
}

}  // namespace orthokit::oracle
