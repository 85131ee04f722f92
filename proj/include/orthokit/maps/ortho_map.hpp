#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "orthokit/core/orthoset.hpp"
#include "orthokit/error.hpp"

namespace orthokit {

// A total function between finite orthosets, stored as a dense table.
class OrthoMap {
 public:
  OrthoMap(FiniteOrthoset dom, FiniteOrthoset cod, std::vector<std::size_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size())
      throw invalid_input("map table has " + std::to_string(table_.size()) + " entries for a domain of " +
                          std::to_string(dom_.size()));
    for (auto v : table_)
      if (v >= cod_.size()) throw invalid_input("map value " + std::to_string(v) + " outside codomain");
  }

  const FiniteOrthoset& dom() const { return dom_; }
  const FiniteOrthoset& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  Subset apply(Subset A) const {
    Subset out;
    A.for_each([&](std::size_t x) { out.insert(table_[x]); });
    return out;
  }

  friend bool operator==(const OrthoMap&, const OrthoMap&) = default;

 private:
  FiniteOrthoset dom_;
  FiniteOrthoset cod_;
  std::vector<std::size_t> table_;
};

inline OrthoMap identity_map(const FiniteOrthoset& X) {
  std::vector<std::size_t> t(X.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return OrthoMap(X, X, std::move(t));
}

inline OrthoMap zero_map(const FiniteOrthoset& X, const FiniteOrthoset& Y) {
  return OrthoMap(X, Y, std::vector<std::size_t>(X.size(), 0));
}

// g ∘ f
inline OrthoMap compose(const OrthoMap& g, const OrthoMap& f) {
  if (!(f.cod() == g.dom())) throw invalid_input("maps are not composable");
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return OrthoMap(f.dom(), g.cod(), std::move(t));
}

inline std::ostream& operator<<(std::ostream& os, const OrthoMap& f) {
  os << "[";
  for (std::size_t x = 0; x < f.dom().size(); ++x) os << (x ? "," : "") << f(x);
  return os << "]";
}

struct AdjointPair {
  OrthoMap f;
  OrthoMap g;
};

struct NotAdjointable {
  std::size_t y = 0;  // first codomain element whose S_y has no realizer
  Subset S;           // S_y = {x : f(x) ⊥ y}
};

using SynthesisResult = std::variant<AdjointPair, NotAdjointable>;

inline bool is_adjoint_pair(const OrthoMap& f, const OrthoMap& g) {
  if (!(g.dom() == f.cod()) || !(g.cod() == f.dom())) throw invalid_input("adjoint candidate has the wrong shape");
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    for (std::size_t y = 0; y < f.cod().size(); ++y)
      if (f.cod().perp(f(x), y) != f.dom().perp(x, g(y))) return false;
  return true;
}

// An adjoint g must satisfy {g(y)}⊥ = S_y for every y, so it exists iff every
// S_y is a row of the domain; the least-index realizer is chosen.
inline SynthesisResult synthesize_adjoint(const OrthoMap& f) {
  const auto& X = f.dom();
  const auto& Y = f.cod();
  std::vector<std::size_t> g(Y.size());
  for (std::size_t y = 0; y < Y.size(); ++y) {
    Subset S;
    for (std::size_t x = 0; x < X.size(); ++x)
      if (Y.perp(f(x), y)) S.insert(x);
    std::optional<std::size_t> z;
    for (std::size_t c = 0; c < X.size() && !z; ++c)
      if (X.row(c) == S) z = c;
    if (!z) return NotAdjointable{y, S};
    g[y] = *z;
  }
  if (f(0) != 0) throw std::logic_error("adjointable map does not fix the falsity");
  return AdjointPair{f, OrthoMap(Y, X, std::move(g))};
}

inline bool is_adjointable(const OrthoMap& f) { return std::holds_alternative<AdjointPair>(synthesize_adjoint(f)); }

// Throws precondition_failed when f has no adjoint.
inline AdjointPair adjoint_pair(const OrthoMap& f) {
  auto r = synthesize_adjoint(f);
  if (auto* p = std::get_if<AdjointPair>(&r)) return std::move(*p);
  const auto& w = std::get<NotAdjointable>(r);
  throw precondition_failed("map is not adjointable; witness y=" + std::to_string(w.y) + ", S=" + w.S.to_string());
}

inline bool maps_equivalent(const OrthoMap& f, const OrthoMap& h) {
  if (!(f.dom() == h.dom()) || !(f.cod() == h.cod())) throw invalid_input("maps have different shapes");
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    if (f.cod().row(f(x)) != f.cod().row(h(x))) return false;
  return true;
}

inline Subset kernel(const OrthoMap& f) {
  Subset out;
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    if (f(x) == 0) out.insert(x);
  return out;
}

inline Subset image(const OrthoMap& f) { return f.apply(f.dom().full()); }

// P(f): [x] ↦ [f(x)] between irredundant quotients.
inline OrthoMap quotient_map(const OrthoMap& f) {
  adjoint_pair(f);
  const Quotient PX = irredundant_quotient(f.dom());
  const Quotient PY = irredundant_quotient(f.cod());
  std::vector<std::optional<std::size_t>> t(PX.orthoset.size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    const std::size_t c = PY.class_of[f(x)];
    auto& slot = t[PX.class_of[x]];
    if (slot && *slot != c) throw std::logic_error("quotient map is not well defined");
    slot = c;
  }
  std::vector<std::size_t> table;
  for (auto v : t) table.push_back(*v);
  return OrthoMap(PX.orthoset, PY.orthoset, std::move(table));
}

struct RestrictedPair {
  AdjointPair pair;                      // f°: (ker f)⊥ → (im f)⊥⊥ and g°
  std::vector<std::size_t> dom_embedding;  // into dom f
  std::vector<std::size_t> cod_embedding;  // into cod f
};

inline RestrictedPair zero_kernel_restriction(const AdjointPair& p) {
  const auto& X = p.f.dom();
  const auto& Y = p.f.cod();
  const Restriction A = restrict_to(X, ortho_complement(X, kernel(p.f)));
  const Restriction B = restrict_to(Y, closure(Y, image(p.f)));
  auto reindex = [](const std::vector<std::size_t>& emb, std::size_t old) {
    for (std::size_t i = 0; i < emb.size(); ++i)
      if (emb[i] == old) return i;
    throw std::logic_error("restricted map leaves its corestriction");
  };
  std::vector<std::size_t> ft, gt;
  for (auto x : A.embedding) ft.push_back(reindex(B.embedding, p.f(x)));
  for (auto y : B.embedding) gt.push_back(reindex(A.embedding, p.g(y)));
  return {{OrthoMap(A.orthoset, B.orthoset, std::move(ft)), OrthoMap(B.orthoset, A.orthoset, std::move(gt))},
          A.embedding,
          B.embedding};
}

inline bool is_bijective(const OrthoMap& f) {
  if (f.dom().size() != f.cod().size()) return false;
  return image(f) == f.cod().full();
}

inline std::optional<OrthoMap> inverse(const OrthoMap& f) {
  if (!is_bijective(f)) return std::nullopt;
  std::vector<std::size_t> t(f.cod().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) t[f(x)] = x;
  return OrthoMap(f.cod(), f.dom(), std::move(t));
}

// Preserves and reflects ⊥.
inline bool is_orthoembedding(const OrthoMap& f) {
  for (std::size_t a = 0; a < f.dom().size(); ++a)
    for (std::size_t b = 0; b < f.dom().size(); ++b)
      if (f.dom().perp(a, b) != f.cod().perp(f(a), f(b))) return false;
  return true;
}

// Each label is evaluated on its own; the implications between them are
// checked by the tests rather than used here.
struct Labels {
  bool orthoisomorphism = false;
  bool orthometry = false;
  bool partial_orthometry = false;
  bool self_adjoint = false;
  std::optional<Subset> sasaki_for;
  std::optional<Subset> projection_onto;

  bool none() const {
    return !orthoisomorphism && !orthometry && !partial_orthometry && !self_adjoint && !sasaki_for &&
           !projection_onto;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (orthoisomorphism) out.push_back("orthoisomorphism");
    if (orthometry) out.push_back("orthometry");
    if (partial_orthometry) out.push_back("partial_orthometry");
    if (sasaki_for) out.push_back("sasaki_for " + sasaki_for->to_string());
    if (projection_onto) out.push_back("projection_onto " + projection_onto->to_string());
    if (self_adjoint) out.push_back("self_adjoint");
    if (out.empty()) out.push_back("none");
    return out;
  }
};

inline Labels classify(const AdjointPair& p) {
  const auto& f = p.f;
  const auto& g = p.g;
  const auto& X = f.dom();
  const auto& Y = f.cod();
  Labels out;

  if (auto inv = inverse(f)) out.orthoisomorphism = is_adjoint_pair(f, *inv);

  const bool im_f_closed = is_orthoclosed(Y, image(f));
  const bool im_g_closed = is_orthoclosed(X, image(g));
  const OrthoMap gf = compose(g, f);
  out.orthometry = im_f_closed && gf == identity_map(X);
  out.partial_orthometry = im_f_closed && im_g_closed && compose(f, gf) == f && compose(g, compose(f, g)) == g;

  // g identifies Y with the subspace im g of X, and f fixes that subspace.
  const Subset A = image(g);
  const bool g_injective = A.size() == Y.size();
  if (g_injective && im_g_closed && is_orthoembedding(g) && compose(f, g) == identity_map(Y)) out.sasaki_for = A;

  if (X == Y) {
    out.self_adjoint = is_adjoint_pair(f, f);
    if (out.self_adjoint && compose(f, f) == f && im_f_closed) out.projection_onto = image(f);
  }
  return out;
}

struct LawReport {
  bool holds = true;
  std::size_t checked = 0;
  std::string witness;
};

// f(A⊥⊥) ⊆ f(A)⊥⊥ for every A (all subsets up to 12 elements, otherwise the
// orthoclosed sets and singletons) and f(A ∨ B)⊥⊥ = f(A)⊥⊥ ∨ f(B)⊥⊥ for all
// orthoclosed A, B.
inline LawReport verify_lattice_adjoint_laws(const AdjointPair& p, const Limits& limits = {}) {
  const auto& f = p.f;
  const auto& X = f.dom();
  const auto& Y = f.cod();
  LawReport r;
  auto check_subset = [&](Subset A) {
    ++r.checked;
    if (r.holds && !f.apply(closure(X, A)).subset_of(closure(Y, f.apply(A)))) {
      r.holds = false;
      r.witness = "f(A⊥⊥) ⊄ f(A)⊥⊥ for A=" + A.to_string();
    }
  };
  const auto cx = enumerate_orthoclosed(X, limits);
  if (X.size() <= 12) {
    for (Subset::mask_type m = 0; m < (Subset::mask_type{1} << X.size()); ++m) check_subset(Subset(m));
  } else {
    for (Subset A : cx) check_subset(A);
    for (std::size_t x = 0; x < X.size(); ++x) check_subset(Subset::singleton(x));
  }
  for (Subset A : cx)
    for (Subset B : cx) {
      ++r.checked;
      const Subset lhs = closure(Y, f.apply(join(X, A, B)));
      const Subset rhs = join(Y, f.apply(A), f.apply(B));
      if (r.holds && lhs != rhs) {
        r.holds = false;
        r.witness = "f(A∨B)⊥⊥ != f(A)⊥⊥ ∨ f(B)⊥⊥ for A=" + A.to_string() + " B=" + B.to_string();
      }
    }
  return r;
}

}  // namespace orthokit
