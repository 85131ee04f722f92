#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/core/orthoset.hpp"
#include "orthokit/core/rank.hpp"
#include "orthokit/hermitian/matrix.hpp"
#include "orthokit/hermitian/space.hpp"
#include "orthokit/maps/ortho_map.hpp"

namespace orthokit::dagger {

template <class M>
struct Mediation {
  std::optional<M> h;
  bool unique = false;
};

// Orthosets with adjointable maps as tables. The dagger is the least-index
// synthesized adjoint, which is the adjoint on irredundant objects.
struct OrthosetTheory {
  using object = FiniteOrthoset;
  using morphism = std::vector<std::size_t>;
  using subspace = Subset;

  static constexpr const char* name = "orthoset";
  static constexpr bool full_homs = false;

  static OrthoMap as_map(const object& a, const object& b, const morphism& f) { return OrthoMap(a, b, f); }

  static morphism compose(const object&, const object&, const object&, const morphism& g, const morphism& f) {
    morphism out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[x] = g.at(f[x]);
    return out;
  }
  static morphism dagger(const object& a, const object& b, const morphism& f) {
    return adjoint_pair(as_map(a, b, f)).g.table();
  }
  static morphism identity(const object& a) { return identity_map(a).table(); }
  static morphism zero(const object& a, const object&) { return morphism(a.size(), 0); }
  static bool is_zero_object(const object& a) { return a.size() == 1; }
  static bool is_unital(const object& a) { return orthokit::is_unital(a); }
  static std::size_t rank(const object& a) { return orthokit::rank(a).value; }

  static std::string describe(const morphism& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "]";
    return os.str();
  }

  static std::vector<subspace> subspaces(const object& a) { return enumerate_orthoclosed(a); }
  static subspace complement(const object& a, const subspace& s) { return ortho_complement(a, s); }
  static subspace image(const object& a, const object& b, const morphism& f) {
    return orthokit::image(as_map(a, b, f));
  }
  static std::string describe(const subspace& s) { return s.to_string(); }

  static bool is_adjoint(const object& a, const object& b, const morphism& f, const morphism& g) {
    return is_adjoint_pair(as_map(a, b, f), as_map(b, a, g));
  }
  static bool partial_orthometry(const object& a, const object& b, const morphism& f, const morphism& fstar) {
    return classify(AdjointPair{as_map(a, b, f), as_map(b, a, fstar)}).partial_orthometry;
  }
  static bool parallel_to_identity(const object& a, const morphism& h) {
    return maps_equivalent(as_map(a, a, h), identity_map(a));
  }

  // Orthogonal pairs of proper elements, and whether f swaps their classes
  // while fixing every proper element orthogonal to both up to ∥.
  static std::vector<std::pair<std::size_t, std::size_t>> orthogonal_points(const object& a) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 1; p < a.size(); ++p)
      for (std::size_t q = p + 1; q < a.size(); ++q)
        if (a.perp(p, q)) out.emplace_back(p, q);
    return out;
  }
  static bool swaps(const object& a, const morphism& f, std::size_t p, std::size_t q) {
    if (a.row(f[p]) != a.row(q) || a.row(f[q]) != a.row(p)) return false;
    const Subset rest = ortho_complement(a, Subset::singleton(p) | Subset::singleton(q)).proper();
    bool ok = true;
    rest.for_each([&](std::size_t z) { ok = ok && a.row(f[z]) == a.row(z); });
    return ok;
  }

  static bool is_orthoisomorphism(const object& a, const object& b, const morphism& f) {
    return classify(adjoint_pair(as_map(a, b, f))).orthoisomorphism;
  }
  static bool preserves_reflects_perp(const object& a, const object& b, const morphism& f) {
    return is_orthoembedding(as_map(a, b, f));
  }
};

// Exact Hermitian spaces with all linear maps. Hom-sets are infinite, so the
// listed matrices are a sample and universal properties are solved
// algebraically.
template <class S>
struct HermitianTheory {
  using object = HermitianSpace<S>;
  using morphism = Matrix<S>;
  using subspace = Subspace<S>;

  static constexpr const char* name = "hermitian";
  static constexpr bool full_homs = true;

  static morphism compose(const object&, const object&, const object&, const morphism& g, const morphism& f) {
    return g * f;
  }
  static morphism dagger(const object& a, const object& b, const morphism& f) {
    return linear_adjoint(LinearMap<S>(a, b, f)).matrix();
  }
  static morphism identity(const object& a) { return Matrix<S>::identity(a.dim()); }
  static morphism zero(const object& a, const object& b) { return Matrix<S>(b.dim(), a.dim()); }
  static bool is_zero_object(const object& a) { return a.dim() == 0; }
  static bool is_unital(const object& a) { return a.dim() == 1; }
  static std::size_t rank(const object& a) { return a.dim(); }
  static std::string describe(const morphism& f) { return to_string(f); }

  static std::optional<morphism> inverse(const object& a, const object& b, const morphism& f) {
    if (a.dim() != b.dim()) return std::nullopt;
    return orthokit::inverse(f);
  }

  // h ∘ [ι_A | ι_B] = [f | g]; unique iff the coprojections jointly span.
  static Mediation<morphism> mediate(const object&, const object&, const object& x, const object& z,
                                     const morphism& inl, const morphism& inr, const morphism& f,
                                     const morphism& g) {
    const Matrix<S> J = hconcat(inl, inr);
    const Matrix<S> F = hconcat(f, g);
    Mediation<morphism> out;
    auto ht = particular_solution(J.transpose(), F.transpose());
    if (ht) out.h = ht->transpose();
    out.unique = orthokit::rank(J) == x.dim();
    if (out.h && out.h->rows() != z.dim()) throw std::logic_error("mediator has the wrong shape");
    return out;
  }

  static morphism add(const morphism& f, const morphism& g) { return f + g; }

  // x = a ⊕ b when an orthonormal basis of x splits into spans of the right
  // sizes and both parts admit isometric inclusions.
  static std::optional<std::pair<morphism, morphism>> canonical_biproduct(const object& a, const object& b,
                                                                          const object& x) {
    if (a.dim() + b.dim() != x.dim()) return std::nullopt;
    const auto u = orthonormal_basis(x, subspace::whole(x.dim()));
    if (!u) return std::nullopt;
    std::vector<Vec<S>> first;
    for (std::size_t j = 0; j < a.dim(); ++j) first.push_back(u->col(j));
    const auto sa = subspace::span(x.dim(), first);
    const auto sb = orthocomplement_sub(x, sa);
    auto ia = construct_inclusion(a, x, sa);
    auto ib = construct_inclusion(b, x, sb);
    if (!ia || !ib) return std::nullopt;
    return std::pair{std::move(*ia), std::move(*ib)};
  }

  // {0}, the whole space, coordinate subspaces, and the lines e_i ± e_j
  // (and e_i ± i e_j over a field with i), plus e_0 + (1+i)e_1 or e_0 + 2e_1,
  // lines whose length has no root over the standard form.
  static std::vector<subspace> subspaces(const object& a) {
    const std::size_t n = a.dim();
    std::vector<subspace> out;
    auto add = [&](const subspace& s) {
      for (const auto& t : out)
        if (t == s) return;
      out.push_back(s);
    };
    auto e = [&](std::size_t i) {
      Vec<S> v(n, S(0));
      v[i] = S(1);
      return v;
    };
    if (n > 12) throw invalid_input("subspace sample needs dim ≤ 12");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Vec<S>> vs;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) vs.push_back(e(i));
      add(subspace::span(n, vs));
    }
    std::vector<S> coeffs{S(1), S(-1)};
    if constexpr (std::is_same_v<S, GaussianRational>) {
      coeffs.push_back(GaussianRational::i());
      coeffs.push_back(-GaussianRational::i());
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (const auto& c : coeffs) {
          auto v = e(i);
          v[j] = c;
          add(subspace::span(n, {v}));
        }
    if (n >= 2) {
      auto v = e(0);
      if constexpr (std::is_same_v<S, GaussianRational>) {
        v[1] = GaussianRational(1, 1);
      } else {
        v[1] = S(2);
      }
      add(subspace::span(n, {v}));
    }
    return out;
  }
  static subspace complement(const object& a, const subspace& s) { return orthocomplement_sub(a, s); }
  static subspace image(const object& a, const object& b, const morphism& f) {
    return orthokit::image(LinearMap<S>(a, b, f));
  }
  static std::string describe(const subspace& s) { return "span" + to_string(s.basis()); }

  // An isometry y → x with image s, sending an orthonormal basis of y onto
  // one of s.
  static std::optional<morphism> construct_inclusion(const object& y, const object& x, const subspace& s) {
    if (y.dim() != s.dim()) return std::nullopt;
    const auto bs = orthonormal_basis(x, s);
    const auto by = orthonormal_basis(y, subspace::whole(y.dim()));
    if (!bs || !by) return std::nullopt;
    const auto byinv = orthokit::inverse(*by);
    if (!byinv) return std::nullopt;
    return *bs * *byinv;
  }

  static bool is_adjoint(const object& a, const object& b, const morphism& f, const morphism& g) {
    return g == dagger(a, b, f);
  }
  // Isometric on the orthocomplement of the kernel: φ*φ is a projection.
  static bool partial_orthometry(const object& a, const object&, const morphism& f, const morphism& fstar) {
    const auto l = classify_linear(LinearMap<S>(a, a, fstar * f));
    return l.projection_onto.has_value();
  }
  static bool parallel_to_identity(const object& a, const morphism& h) {
    if (a.dim() == 0) return true;
    const S c = h(0, 0);
    return !is_zero(c) && h == c * Matrix<S>::identity(a.dim());
  }

  static std::vector<std::pair<std::size_t, std::size_t>> orthogonal_points(const object& a) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < a.dim(); ++p)
      for (std::size_t q = p + 1; q < a.dim(); ++q)
        if (is_zero(a.gram()(p, q))) out.emplace_back(p, q);
    return out;
  }
  // f e_p ∈ lin(e_q), f e_q ∈ lin(e_p), and f is a nonzero scalar on
  // {e_p, e_q}⊥.
  static bool swaps(const object& a, const morphism& f, std::size_t p, std::size_t q) {
    const std::size_t n = a.dim();
    auto unit = [&](std::size_t i) {
      Vec<S> v(n, S(0));
      v[i] = S(1);
      return v;
    };
    const auto line = [&](std::size_t i) { return subspace::span(n, {unit(i)}); };
    const auto fp = f * unit(p);
    const auto fq = f * unit(q);
    if (is_zero_vector(fp) || is_zero_vector(fq)) return false;
    if (!line(q).contains(fp) || !line(p).contains(fq)) return false;
    const auto rest = orthocomplement_sub(a, subspace::span(n, {unit(p), unit(q)}));
    std::optional<S> scale;
    for (const auto& b : rest.vectors()) {
      const auto fb = f * b;
      std::size_t lead = 0;
      while (is_zero(b[lead])) ++lead;
      const S c = fb[lead] / b[lead];
      if (is_zero(c)) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (!(fb[k] == S(c * b[k]))) return false;
      if (scale && !(*scale == c)) return false;
      scale = c;
    }
    return true;
  }

 private:
  static bool is_zero_vector(const Vec<S>& v) {
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }
};

}  // namespace orthokit::dagger
