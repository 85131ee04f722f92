#pragma once

// Hand-rolled random generators for the property tests and acceptance suite.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "orthokit/hermitian/space.hpp"

namespace orthokit::gen {

template <class S>
struct scalar_gen;

template <>
struct scalar_gen<Rational> {
  // Small numerators and denominators, zero about a quarter of the time.
  static Rational draw(std::mt19937_64& rng, int height = 3) {
    std::uniform_int_distribution<int> num(-height, height), den(1, height);
    if (rng() % 4 == 0) return Rational(0);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  }
};

template <>
struct scalar_gen<GaussianRational> {
  static GaussianRational draw(std::mt19937_64& rng, int height = 3) {
    return {scalar_gen<Rational>::draw(rng, height), scalar_gen<Rational>::draw(rng, height)};
  }
};

template <class S>
S scalar(std::mt19937_64& rng, int height = 3) {
  return scalar_gen<S>::draw(rng, height);
}

template <class S>
Vec<S> vector(std::mt19937_64& rng, std::size_t n, int height = 3) {
  Vec<S> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar<S>(rng, height));
  return v;
}

template <class S>
Matrix<S> matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int height = 3) {
  Matrix<S> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar<S>(rng, height);
  return m;
}

// Bᴴ B for an invertible B, which is Hermitian and positive definite.
template <class S>
Matrix<S> positive_gram(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    const auto B = matrix<S>(rng, n, n, 2);
    if (rank(B) == n) return B.conj_transpose() * B;
  }
}

// A subspace spanned by k random vectors, k uniform in [0, n].
template <class S>
Subspace<S> subspace(std::mt19937_64& rng, std::size_t n, int height = 3) {
  const std::size_t k = rng() % (n + 1);
  std::vector<Vec<S>> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(vector<S>(rng, n, height));
  return Subspace<S>::span(n, vs);
}

// An orthogonal basis of H as canonical line representatives, by exact
// Gram-Schmidt without normalization.
template <class S>
std::vector<Vec<S>> orthogonal_basis(std::mt19937_64& rng, const HermitianSpace<S>& H) {
  while (true) {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < H.dim(); ++i) {
      Vec<S> v = vector<S>(rng, H.dim(), 2);
      for (const auto& b : out) {
        const S c = inner(H, v, b) / inner(H, b, b);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= S(c * b[k]);
      }
      bool zero = true;
      for (const auto& x : v) zero = zero && is_zero(x);
      if (zero) break;
      const std::size_t lead = std::find_if(v.begin(), v.end(), [](const S& x) { return !is_zero(x); }) - v.begin();
      const S inv = S(1) / v[lead];
      for (auto& x : v) x = S(x * inv);
      out.push_back(v);
    }
    if (out.size() == H.dim()) return out;
  }
}

// Union of one to three random orthogonal bases plus up to two stray lines.
template <class S>
std::vector<Vec<S>> line_sample(std::mt19937_64& rng, const HermitianSpace<S>& H) {
  std::vector<Vec<S>> out;
  auto add = [&](const Vec<S>& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  const int bases = 1 + static_cast<int>(rng() % 3);
  for (int b = 0; b < bases; ++b)
    for (const auto& v : orthogonal_basis(rng, H)) add(v);
  const int stray = static_cast<int>(rng() % 3);
  for (int k = 0; k < stray; ++k) {
    Vec<S> v = vector<S>(rng, H.dim(), 1);
    const auto it = std::find_if(v.begin(), v.end(), [](const S& x) { return !is_zero(x); });
    if (it == v.end()) continue;
    const S inv = S(1) / *it;
    for (auto& x : v) x = S(x * inv);
    add(v);
  }
  return out;
}

}  // namespace orthokit::gen
