#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthokit/core/orthoset.hpp"

namespace orthokit {

// C(X) materialized. Elements are sorted by bitmask, which is a linear
// extension of containment, so index 0 is {0} and the last index is X.
class OrthoLattice {
 public:
  explicit OrthoLattice(const FiniteOrthoset& X, const Limits& limits = {})
      : X_(X), elements_(enumerate_orthoclosed(X, limits)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].bits(), i);
    comp_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) comp_[i] = index_of(ortho_complement(X_, elements_[i]));
    build_covers();
    verify();
  }

  const FiniteOrthoset& orthoset() const { return X_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Subset>& elements() const { return elements_; }
  Subset element(std::size_t i) const { return elements_[i]; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }

  bool leq(std::size_t i, std::size_t j) const { return elements_[i].subset_of(elements_[j]); }
  std::size_t comp(std::size_t i) const { return comp_[i]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return index_of(elements_[i] & elements_[j]); }
  // (A ∪ B)⊥⊥ = (A⊥ ∩ B⊥)⊥
  std::size_t join(std::size_t i, std::size_t j) const { return comp_[meet(comp_[i], comp_[j])]; }

  std::size_t index_of(Subset s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) throw precondition_failed(s.to_string() + " is not orthoclosed");
    return it->second;
  }
  bool contains(Subset s) const { return index_.count(s.bits()) != 0; }

  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return covers_[i]; }
  bool covers(std::size_t upper, std::size_t lower) const {
    for (auto c : covers_[lower])
      if (c == upper) return true;
    return false;
  }

 private:
  // The covers of A are the minimal sets among (A ∪ {x})⊥⊥ for x outside A.
  void build_covers() {
    covers_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      std::vector<Subset> cand;
      (X_.full() - elements_[i]).for_each([&](std::size_t x) {
        Subset c = closure(X_, elements_[i] | Subset::singleton(x));
        for (Subset d : cand)
          if (d == c) return;
        cand.push_back(c);
      });
      for (Subset c : cand) {
        bool minimal = true;
        for (Subset d : cand)
          if (d != c && d.subset_of(c)) minimal = false;
        if (minimal) covers_[i].push_back(index_of(c));
      }
      std::sort(covers_[i].begin(), covers_[i].end());
    }
  }

  void verify() const {
    const std::size_t L = elements_.size();
    if (elements_.front() != Subset::singleton(0) || elements_.back() != X_.full())
      throw precondition_failed("C(X) bounds are not {0} and X");
    for (std::size_t i = 0; i < L; ++i) {
      if (comp_[comp_[i]] != i) throw precondition_failed("complement not involutive at " + elements_[i].to_string());
      if (meet(i, comp_[i]) != bottom() || join(i, comp_[i]) != top())
        throw precondition_failed("complement law fails at " + elements_[i].to_string());
      for (std::size_t j = 0; j < L; ++j) {
        meet(i, j);  // throws when the meet leaves the family
        if (leq(i, j) && !leq(comp_[j], comp_[i]))
          throw precondition_failed("complement does not reverse order at " + elements_[i].to_string());
      }
    }
  }

  FiniteOrthoset X_;
  std::vector<Subset> elements_;
  std::unordered_map<Subset::mask_type, std::size_t> index_;
  std::vector<std::size_t> comp_;
  std::vector<std::vector<std::size_t>> covers_;
};

inline OrthoLattice build_lattice(const FiniteOrthoset& X, const Limits& limits = {}) {
  return OrthoLattice(X, limits);
}

inline bool is_orthomodular(const OrthoLattice& L) {
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = 0; b < L.size(); ++b)
      if (L.leq(a, b) && L.join(a, L.meet(b, L.comp(a))) != b) return false;
  return true;
}

inline std::vector<std::size_t> atoms(const OrthoLattice& L) {
  if (L.size() == 1) return {};
  return L.upper_covers(L.bottom());
}

inline bool has_covering_property(const OrthoLattice& L) {
  const auto at = atoms(L);
  for (std::size_t a = 0; a < L.size(); ++a)
    for (auto p : at)
      if (!L.leq(p, a) && !L.covers(L.join(a, p), a)) return false;
  return true;
}

// Every element is the join of the atoms below it.
inline bool is_atomistic_lattice(const OrthoLattice& L) {
  const auto at = atoms(L);
  for (std::size_t a = 0; a < L.size(); ++a) {
    std::size_t j = L.bottom();
    for (auto p : at)
      if (L.leq(p, a)) j = L.join(j, p);
    if (j != a) return false;
  }
  return true;
}

inline bool is_AC(const OrthoLattice& L) { return is_atomistic_lattice(L) && has_covering_property(L); }

// Longest chain, counted in covering steps.
inline std::size_t length(const OrthoLattice& L) {
  std::vector<std::size_t> depth(L.size(), 0);
  for (std::size_t i = 0; i < L.size(); ++i)
    for (auto c : L.upper_covers(i)) depth[c] = std::max(depth[c], depth[i] + 1);
  return depth[L.top()];
}

inline bool is_central(const OrthoLattice& L, std::size_t z) {
  const std::size_t zc = L.comp(z);
  for (std::size_t a = 0; a < L.size(); ++a)
    if (L.join(L.meet(a, z), L.meet(a, zc)) != a) return false;
  return true;
}

inline bool is_irreducible_lattice(const OrthoLattice& L) {
  for (std::size_t z = 1; z + 1 < L.size(); ++z)
    if (is_central(L, z)) return false;
  return true;
}

}  // namespace orthokit
