#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orthokit/error.hpp"
#include "orthokit/hermitian/space.hpp"

namespace orthokit {

template <class S>
bool commutes(const LinearMap<S>& a, const LinearMap<S>& b) {
  return a.matrix() * b.matrix() == b.matrix() * a.matrix();
}

struct CommutationRow {
  std::size_t projection = 0;
  bool with_u = false;
  bool with_v = false;
};

struct StrictRootReport {
  bool passed = true;
  bool squares_to_u = true;
  std::vector<CommutationRow> rows;
  std::string witness;
  static constexpr const char* scope =
      "strictness checked against the supplied projections only, not the whole subspace lattice";
};

// Which supplied projections commute with U and with V. No unitarity
// requirement; strict_square_root_check adds those preconditions.
template <class S>
StrictRootReport commutation_profile(const LinearMap<S>& U, const LinearMap<S>& V,
                                     const std::vector<LinearMap<S>>& projections) {
  StrictRootReport r;
  r.squares_to_u = V.matrix() * V.matrix() == U.matrix();
  if (!r.squares_to_u) {
    r.passed = false;
    r.witness = "V∘V != U";
  }
  for (std::size_t k = 0; k < projections.size(); ++k) {
    CommutationRow row{k, commutes(projections[k], U), commutes(projections[k], V)};
    if (row.with_u != row.with_v && r.passed) {
      r.passed = false;
      r.witness = "projection #" + std::to_string(k) + " " + to_string(projections[k].matrix()) +
                  (row.with_u ? " commutes with U but not with V" : " commutes with V but not with U");
    }
    r.rows.push_back(row);
  }
  return r;
}

template <class S>
bool is_unitary(const LinearMap<S>& f) {
  return classify_linear(f).unitary;
}

template <class S>
StrictRootReport strict_square_root_check(const LinearMap<S>& U, const LinearMap<S>& V,
                                          const std::vector<LinearMap<S>>& projections) {
  if (!(U.dom() == U.cod()) || !(V.dom() == U.dom()) || !(V.cod() == U.dom()))
    throw invalid_input("U and V must be endomorphisms of one space");
  if (!is_unitary(U)) throw invalid_input("U is not unitary");
  if (!is_unitary(V)) throw invalid_input("V is not unitary");
  for (std::size_t k = 0; k < projections.size(); ++k) {
    if (!(projections[k].dom() == U.dom()) || !classify_linear(projections[k]).projection_onto)
      throw invalid_input("listed map #" + std::to_string(k) + " is not a projection of the space");
  }
  return commutation_profile(U, V, projections);
}

template <class S>
struct PythagoreanEntry {
  S alpha;
  S beta;
  std::optional<S> gamma;  // γγ* = αα* + ββ*, when one exists
};

template <class S>
struct ScalarReport {
  bool formally_real = true;
  std::string formally_real_witness;
  bool pythagorean_on_sample = true;
  std::vector<PythagoreanEntry<S>> entries;
};

// Formal reality on the tuples (Σ αα* = 0 forces all α = 0) and, for each
// pair, whether αα* + ββ* is itself a norm.
template <class S>
ScalarReport<S> scalar_property_tests(const std::vector<std::vector<S>>& tuples,
                                      const std::vector<std::pair<S, S>>& pairs) {
  ScalarReport<S> r;
  for (const auto& t : tuples) {
    Rational total(0);
    bool all_zero = true;
    for (const auto& a : t) {
      total += norm(a);
      all_zero = all_zero && is_zero(a);
    }
    if (total == 0 && !all_zero && r.formally_real) {
      r.formally_real = false;
      r.formally_real_witness = "a nonzero tuple has vanishing norm sum";
    }
  }
  for (const auto& [a, b] : pairs) {
    PythagoreanEntry<S> e{a, b, scalar_traits<S>::norm_root(Rational(norm(a) + norm(b)))};
    if (!e.gamma) r.pythagorean_on_sample = false;
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace orthokit
