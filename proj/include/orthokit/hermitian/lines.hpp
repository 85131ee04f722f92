#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "orthokit/core/orthoset.hpp"
#include "orthokit/error.hpp"
#include "orthokit/hermitian/space.hpp"

namespace orthokit {

// Scales the first nonzero coordinate to 1; the zero vector is the zero line.
template <class S>
Vec<S> line_repr(Vec<S> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    const S inv = S(1) / v[k];
    for (std::size_t j = k; j < v.size(); ++j) v[j] = S(v[j] * inv);
    break;
  }
  return v;
}

template <class S>
bool is_zero_vector(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
bool lines_orthogonal(const HermitianSpace<S>& H, const Vec<S>& l1, const Vec<S>& l2) {
  return is_zero(inner(H, l1, l2));
}

// [u] ↦ [φ(u)] on each listed line.
template <class S>
std::vector<Vec<S>> induced_line_map(const LinearMap<S>& phi, const std::vector<Vec<S>>& lines) {
  std::vector<Vec<S>> out;
  for (const auto& l : lines) out.push_back(line_repr(phi(l)));
  return out;
}

template <class S>
struct LineSample {
  FiniteOrthoset orthoset;
  std::vector<Vec<S>> lines;  // lines[i] is element i + 1
  bool closure_faithful = true;
  std::string witness;        // a sample-closed set that is no trace, if any
};

// The orthoset {0} ∪ lines. A set A of lines always satisfies
// trace(span A) ⊆ A⊥⊥, so every sample-closed set is trivially the trace of
// its span. The useful condition is the converse: sample closure agrees with
// closure in H, i.e. the trace of every subspace spanned by sample lines is
// closed in the sample. That is what closure_faithful records.
template <class S>
LineSample<S> orthoset_sample(const HermitianSpace<S>& H, const std::vector<Vec<S>>& vectors,
                              const Limits& limits = {}) {
  LineSample<S> out;
  for (const auto& v : vectors) {
    if (v.size() != H.dim()) throw invalid_input("sample vector has the wrong length");
    if (is_zero_vector(v)) throw invalid_input("sample contains the zero vector");
    auto l = line_repr(v);
    for (const auto& m : out.lines)
      if (m == l) throw invalid_input("duplicate line " + to_string(l) + " in sample");
    out.lines.push_back(std::move(l));
  }
  std::vector<FiniteOrthoset::Edge> edges;
  for (std::size_t i = 0; i < out.lines.size(); ++i)
    for (std::size_t j = i + 1; j < out.lines.size(); ++j)
      if (lines_orthogonal(H, out.lines[i], out.lines[j])) edges.emplace_back(i + 1, j + 1);
  out.orthoset = FiniteOrthoset(out.lines.size() + 1, edges);

  auto trace = [&](const Subspace<S>& T) {
    Subset t{0};
    for (std::size_t i = 0; i < out.lines.size(); ++i)
      if (T.contains(out.lines[i])) t.insert(i + 1);
    return t;
  };
  // Every span of sample lines is the span of its trace, so spans are
  // enumerated as traces grown one line at a time.
  std::vector<Subset> frontier{Subset{0}};
  std::set<Subset::mask_type> seen{Subset{0}.bits()};
  while (!frontier.empty() && out.closure_faithful) {
    const Subset A = frontier.back();
    frontier.pop_back();
    if (!is_orthoclosed(out.orthoset, A)) {
      out.closure_faithful = false;
      out.witness = "span of " + A.to_string() + " meets the sample in a set whose sample closure is " +
                    closure(out.orthoset, A).to_string();
      break;
    }
    if (seen.size() > limits.max_lattice) throw bound_exceeded("max-lattice", limits.max_lattice, seen.size());
    (out.orthoset.full() - A).for_each([&](std::size_t x) {
      std::vector<Vec<S>> gens;
      (A | Subset::singleton(x)).proper().for_each([&](std::size_t y) { gens.push_back(out.lines[y - 1]); });
      const Subset t = trace(Subspace<S>::span(H.dim(), gens));
      if (seen.insert(t.bits()).second) frontier.push_back(t);
    });
  }
  return out;
}

}  // namespace orthokit
