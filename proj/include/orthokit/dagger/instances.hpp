#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/core/orthoset.hpp"
#include "orthokit/dagger/category.hpp"
#include "orthokit/dagger/theories.hpp"
#include "orthokit/error.hpp"
#include "orthokit/hermitian/space.hpp"
#include "orthokit/maps/ortho_map.hpp"

namespace orthokit::dagger {

using OrthosetInstance = CategoryInstance<OrthosetTheory>;
template <class S>
using HermitianInstance = CategoryInstance<HermitianTheory<S>>;

struct NamedOrthoset {
  FiniteOrthoset orthoset;
  std::string name;
};

// Every adjointable table between every ordered pair, found by trying all
// |Y|^(|X|-1) tables that fix 0. max_proper bounds |X|-1.
inline OrthosetInstance adjointable_instance(const std::vector<NamedOrthoset>& objects, std::size_t max_proper = 4) {
  for (const auto& o : objects)
    if (o.orthoset.size() - 1 > max_proper) throw bound_exceeded("bruteforce-max", max_proper, o.orthoset.size() - 1);
  const auto build = [&](bool quotients) {
    OrthosetInstance C;
    for (const auto& o : objects) {
      if (quotients && !is_irredundant(o.orthoset))
        C.add_object(irredundant_quotient(o.orthoset).orthoset, o.name + "/∥");
      else
        C.add_object(o.orthoset, o.name);
    }
    for (std::size_t a = 0; a < C.size(); ++a)
      for (std::size_t b = 0; b < C.size(); ++b) {
        const auto& X = C.obj(a);
        const auto& Y = C.obj(b);
        std::size_t total = 1;
        for (std::size_t i = 1; i < X.size(); ++i) total *= Y.size();
        std::vector<std::size_t> t(X.size(), 0);
        for (std::size_t k = 0; k < total; ++k) {
          std::size_t r = k;
          for (std::size_t i = 1; i < X.size(); ++i) {
            t[i] = r % Y.size();
            r /= Y.size();
          }
          if (is_adjointable(OrthoMap(X, Y, t))) C.add_morphism(a, b, t);
        }
      }
    return C;
  };
  auto C = build(false);
  for (std::size_t a = 0; a < C.size(); ++a)
    for (std::size_t b = 0; b < C.size(); ++b)
      for (const auto& f : C.hom(a, b))
        if (!(C.dagger(b, a, C.dagger(a, b, f)) == f)) return build(true);
  return C;
}

// {0, I₂, MO2, I₂∨I₂} with all adjointable maps and the candidate splittings
// MO2 = {0,1}⊕{0,2}, MO2 = {0,3}⊕{0,4}, and I₂∨I₂ = I₂⊕I₂.
inline OrthosetInstance standard_orthoset_instance() {
  const auto I2 = trivial_orthoset(1);
  const auto W = wedge_sum(I2, I2);
  auto C = adjointable_instance({{zero_orthoset(), "0"}, {I2, "I2"}, {mo2(), "MO2"}, {W.orthoset, "I2vI2"}});
  C.add_witness({1, 1, 2, {0, 1}, {0, 2}, "MO2={0,1}+{0,2}"});
  C.add_witness({1, 1, 2, {0, 3}, {0, 4}, "MO2={0,3}+{0,4}"});
  C.add_witness({1, 1, 3, W.left, W.right, "I2vI2=I2+I2"});
  return C;
}

namespace detail {

template <class S>
std::vector<S> units() {
  if constexpr (std::is_same_v<S, GaussianRational>) {
    return {S(1), S(-1), GaussianRational::i(), -GaussianRational::i()};
  } else {
    return {S(1), S(-1)};
  }
}

// Matrices with at most `nonzero` entries, each a unit.
template <class S>
void sparse_matrices(std::size_t rows, std::size_t cols, std::size_t nonzero, std::vector<Matrix<S>>& out) {
  const auto u = units<S>();
  const std::size_t cells = rows * cols;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    // enumerate unit assignments for the chosen cells
    std::vector<std::size_t> digit(pick.size(), 0);
    while (true) {
      Matrix<S> m(rows, cols);
      for (std::size_t k = 0; k < pick.size(); ++k) m(pick[k] / cols, pick[k] % cols) = u[digit[k]];
      out.push_back(std::move(m));
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == u.size()) digit[k++] = 0;
      if (k == digit.size()) break;
    }
    if (pick.size() == nonzero) return;
    for (std::size_t c = start; c < cells; ++c) {
      pick.push_back(c);
      rec(c + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// Standard spaces of the given dimensions. Hom-sets list every matrix with
// at most two unit entries when both dimensions are ≤ 2, the partial
// permutation matrices otherwise, a few extra unitaries, isometries and
// projections in dimension ≤ 2, and are closed under the dagger.
// ℚ(i)² = ℚ(i)¹ ⊕ ℚ(i)¹ is supplied twice (coordinate injections, swapped)
// when both objects are present.
template <class S>
HermitianInstance<S> standard_hermitian_instance(const std::vector<std::size_t>& dims) {
  HermitianInstance<S> C;
  const std::string field = scalar_traits<S>::name;
  for (auto d : dims) C.add_object(HermitianSpace<S>::standard(d), field + "^" + std::to_string(d));
  const auto half = S(Rational(1, 2));
  for (std::size_t a = 0; a < C.size(); ++a)
    for (std::size_t b = 0; b < C.size(); ++b) {
      const std::size_t r = C.obj(b).dim(), c = C.obj(a).dim();
      std::vector<Matrix<S>> ms;
      if (r <= 2 && c <= 2) {
        detail::sparse_matrices<S>(r, c, 2, ms);
      } else {
        detail::sparse_matrices<S>(r, c, 0, ms);
        // partial permutations with entries 1
        const std::size_t k = std::min(r, c);
        std::vector<std::size_t> perm(std::max(r, c));
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
          Matrix<S> m(r, c);
          for (std::size_t i = 0; i < k; ++i) {
            if (r >= c) m(perm[i], i) = S(1);
            else m(i, perm[i]) = S(1);
          }
          ms.push_back(m);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      if (r == 2 && c == 2) {
        ms.push_back(half * Matrix<S>{{S(1), S(1)}, {S(1), S(1)}});
        ms.push_back(half * Matrix<S>{{S(1), S(-1)}, {S(-1), S(1)}});
        if constexpr (std::is_same_v<S, GaussianRational>) {
          const S w = S(GaussianRational(Rational(1, 2), Rational(-1, 2)));  // (1-i)/2, |w|² = 1/2
          ms.push_back(w * Matrix<S>{{S(1), S(1)}, {S(1), S(-1)}});
        } else {
          ms.push_back(Matrix<S>{{S(Rational(3, 5)), S(Rational(-4, 5))}, {S(Rational(4, 5)), S(Rational(3, 5))}});
        }
      }
      if constexpr (std::is_same_v<S, GaussianRational>) {
        const S w = S(GaussianRational(Rational(1, 2), Rational(-1, 2)));
        if (r == 2 && c == 1) {
          ms.push_back(w * Matrix<S>{{S(1)}, {S(1)}});
          ms.push_back(w * Matrix<S>{{S(1)}, {S(-1)}});
        }
      }
      for (auto& m : ms) C.add_morphism(a, b, std::move(m));
    }
  // close under the dagger
  for (std::size_t a = 0; a < C.size(); ++a)
    for (std::size_t b = 0; b < C.size(); ++b) {
      const auto listed = C.hom(a, b);
      for (const auto& m : listed) C.add_morphism(b, a, C.dagger(a, b, m));
    }
  std::optional<std::size_t> one, two;
  for (std::size_t a = 0; a < C.size(); ++a) {
    if (C.obj(a).dim() == 1 && !one) one = a;
    if (C.obj(a).dim() == 2 && !two) two = a;
  }
  if (one && two) {
    const Matrix<S> e1{{S(1)}, {S(0)}}, e2{{S(0)}, {S(1)}};
    C.add_witness({*one, *one, *two, e1, e2, field + "^2=" + field + "^1+" + field + "^1"});
    C.add_witness({*one, *one, *two, e2, e1, field + "^2=" + field + "^1+" + field + "^1 (swapped)"});
  }
  return C;
}

}  // namespace orthokit::dagger
