#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orthokit/core/subset.hpp"
#include "orthokit/error.hpp"

namespace orthokit {

// Enumeration bounds shared by every exhaustive routine.
struct Limits {
  std::size_t max_n = 24;
  std::size_t max_lattice = 4096;
};

// A finite orthoset on {0, ..., n-1}; element 0 is the falsity.
// Row x holds {x}⊥ as a bitmask.
class FiniteOrthoset {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  FiniteOrthoset() : FiniteOrthoset(1, {}) {}

  // Symmetrizes the edge list and completes the row of 0.
  FiniteOrthoset(std::size_t n, const std::vector<Edge>& edges) : rows_(n) {
    if (n == 0) throw invalid_input("orthoset must have at least one element");
    if (n > max_elements)
      throw invalid_input("orthoset has " + std::to_string(n) + " elements; at most " +
                          std::to_string(max_elements) + " are supported");
    for (auto [i, j] : edges) {
      if (i >= n || j >= n)
        throw invalid_input("edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for n=" + std::to_string(n));
      if (i == j && i != 0)
        throw invalid_input("element " + std::to_string(i) + " is orthogonal to itself");
      rows_[i].insert(j);
      rows_[j].insert(i);
    }
    rows_[0] = Subset::full(n);
    for (std::size_t x = 1; x < n; ++x) rows_[x].insert(0);
  }

  std::size_t size() const { return rows_.size(); }
  Subset full() const { return Subset::full(size()); }
  Subset row(std::size_t x) const { return rows_[x]; }
  bool perp(std::size_t x, std::size_t y) const { return rows_[x].contains(y); }

  // Pairs i < j of proper elements with i ⊥ j.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (perp(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const FiniteOrthoset&, const FiniteOrthoset&) = default;

 private:
  std::vector<Subset> rows_;
};

inline FiniteOrthoset validate_orthoset(std::size_t n, const std::vector<FiniteOrthoset::Edge>& edges) {
  return FiniteOrthoset(n, edges);
}

inline FiniteOrthoset zero_orthoset() { return FiniteOrthoset(1, {}); }

// The orthoset with k proper elements and no proper orthogonalities; k = 1 is
// the singleton I₂.
inline FiniteOrthoset trivial_orthoset(std::size_t k) { return FiniteOrthoset(k + 1, {}); }

// {0, x, x', y, y'} with x ⊥ x' and y ⊥ y', indexed 0..4.
inline FiniteOrthoset mo2() { return FiniteOrthoset(5, {{1, 2}, {3, 4}}); }

inline Subset ortho_complement(const FiniteOrthoset& X, Subset A) {
  Subset out = X.full();
  A.for_each([&](std::size_t a) { out &= X.row(a); });
  return out;
}

inline Subset closure(const FiniteOrthoset& X, Subset A) {
  return ortho_complement(X, ortho_complement(X, A));
}

inline bool is_orthoclosed(const FiniteOrthoset& X, Subset A) { return closure(X, A) == A; }

// Join in C(X).
inline Subset join(const FiniteOrthoset& X, Subset A, Subset B) { return closure(X, A | B); }

// All orthoclosed subsets, sorted by bitmask. Every orthoclosed set is an
// intersection of rows, so the family is the intersection-closure of the rows.
inline std::vector<Subset> enumerate_orthoclosed(const FiniteOrthoset& X, const Limits& limits = {}) {
  if (X.size() > limits.max_n) throw bound_exceeded("max-n", limits.max_n, X.size());
  std::vector<Subset> family{X.full()};
  std::unordered_set<Subset::mask_type> seen{X.full().bits()};
  for (std::size_t x = 1; x < X.size(); ++x) {
    const Subset r = X.row(x);
    const std::size_t before = family.size();
    for (std::size_t i = 0; i < before; ++i) {
      const Subset s = family[i] & r;
      if (seen.insert(s.bits()).second) {
        family.push_back(s);
        if (family.size() > limits.max_lattice)
          throw bound_exceeded("max-lattice", limits.max_lattice, family.size());
      }
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

inline bool is_irredundant(const FiniteOrthoset& X) {
  for (std::size_t x = 1; x < X.size(); ++x)
    for (std::size_t y = x + 1; y < X.size(); ++y)
      if (X.row(x) == X.row(y)) return false;
  return true;
}

inline bool is_atomistic(const FiniteOrthoset& X) {
  for (std::size_t x = 1; x < X.size(); ++x)
    for (std::size_t y = 1; y < X.size(); ++y)
      if (X.row(x).subset_of(X.row(y)) && X.row(x) != X.row(y)) return false;
  return true;
}

inline bool parallel(const FiniteOrthoset& X, std::size_t x, std::size_t y) { return X.row(x) == X.row(y); }

struct Quotient {
  FiniteOrthoset orthoset;
  std::vector<std::size_t> class_of;  // element -> class index

  std::vector<Subset> classes() const {
    std::vector<Subset> out(orthoset.size());
    for (std::size_t x = 0; x < class_of.size(); ++x) out[class_of[x]].insert(x);
    return out;
  }
};

// P(X): elements grouped by equal rows, classes numbered by least member.
inline Quotient irredundant_quotient(const FiniteOrthoset& X) {
  std::vector<std::size_t> class_of(X.size());
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < X.size(); ++x) {
    auto it = std::find_if(rep.begin(), rep.end(), [&](std::size_t r) { return X.row(r) == X.row(x); });
    if (it == rep.end()) {
      class_of[x] = rep.size();
      rep.push_back(x);
    } else {
      class_of[x] = static_cast<std::size_t>(it - rep.begin());
    }
  }
  std::vector<FiniteOrthoset::Edge> edges;
  for (std::size_t i = 1; i < rep.size(); ++i)
    for (std::size_t j = i + 1; j < rep.size(); ++j)
      if (X.perp(rep[i], rep[j])) edges.emplace_back(i, j);
  return {FiniteOrthoset(rep.size(), edges), std::move(class_of)};
}

inline bool is_unital(const FiniteOrthoset& X) {
  for (std::size_t z = 1; z < X.size(); ++z)
    if (X.row(z) == Subset::singleton(0)) return true;
  return false;
}

// Sub-orthoset on the members of A in increasing order, with the embedding
// back into X. A must contain 0.
struct Restriction {
  FiniteOrthoset orthoset;
  std::vector<std::size_t> embedding;  // new index -> old index
};

inline Restriction restrict_to(const FiniteOrthoset& X, Subset A) {
  if (!A.contains(0)) throw invalid_input("restriction requires a set containing 0");
  std::vector<std::size_t> emb = A.elements();
  std::vector<FiniteOrthoset::Edge> edges;
  for (std::size_t i = 1; i < emb.size(); ++i)
    for (std::size_t j = i + 1; j < emb.size(); ++j)
      if (X.perp(emb[i], emb[j])) edges.emplace_back(i, j);
  return {FiniteOrthoset(emb.size(), edges), std::move(emb)};
}

struct Wedge {
  FiniteOrthoset orthoset;
  std::vector<std::size_t> left;   // X index -> wedge index
  std::vector<std::size_t> right;  // Y index -> wedge index
};

// Disjoint union with the falsities identified and full cross-orthogonality.
inline Wedge wedge_sum(const FiniteOrthoset& X, const FiniteOrthoset& Y) {
  const std::size_t n = X.size() + Y.size() - 1;
  std::vector<std::size_t> left(X.size()), right(Y.size());
  for (std::size_t i = 0; i < X.size(); ++i) left[i] = i;
  right[0] = 0;
  for (std::size_t j = 1; j < Y.size(); ++j) right[j] = X.size() - 1 + j;
  std::vector<FiniteOrthoset::Edge> edges;
  for (auto [i, j] : X.edges()) edges.emplace_back(left[i], left[j]);
  for (auto [i, j] : Y.edges()) edges.emplace_back(right[i], right[j]);
  for (std::size_t i = 1; i < X.size(); ++i)
    for (std::size_t j = 1; j < Y.size(); ++j) edges.emplace_back(left[i], right[j]);
  return {FiniteOrthoset(n, edges), std::move(left), std::move(right)};
}

}  // namespace orthokit
