#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "orthokit/dagger/category.hpp"
#include "orthokit/dagger/theories.hpp"
#include "orthokit/error.hpp"
#include "orthokit/report.hpp"

namespace orthokit::dagger {

struct HarnessOptions {
  std::size_t sample = 8;             // morphisms per hom-set when a check is sampled
  std::size_t exhaustive = 200000;    // tuples below which law checks are exhaustive
  std::size_t up_pairs = 4096;        // (f, g) pairs per target in universal properties
  std::size_t pairings = 16;          // inclusion pairs tried per subspace
};

namespace detail {

inline std::vector<std::size_t> spread(std::size_t n, std::size_t cap) {
  std::vector<std::size_t> out;
  const std::size_t k = n <= cap ? n : cap;
  for (std::size_t i = 0; i < k; ++i) out.push_back(n <= cap ? i : i * n / cap);
  return out;
}

class Stopwatch {
 public:
  Stopwatch(Report& r, std::string key) : r_(r), key_(std::move(key)), t0_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const auto dt = std::chrono::steady_clock::now() - t0_;
    r_.timing_ms[key_] += std::chrono::duration<double, std::milli>(dt).count();
  }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  Report& r_;
  std::string key_;
  std::chrono::steady_clock::time_point t0_;
};

// Collects the first violation of a law and how many cases were checked.
struct Tally {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string witness;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) witness = describe();
  }
  Status status() const { return violations ? Status::fail : Status::pass; }
  std::string detail(const std::string& what) const {
    std::string d = std::to_string(checked) + " " + what;
    if (violations) d += ", " + std::to_string(violations) + " violations";
    return d;
  }
};

}  // namespace detail

// All checks are relative to the listed hom-sets, except that theories with
// complete hom-sets (Hermitian) solve universal properties algebraically.
template <Theory T>
class Harness {
 public:
  using object = typename T::object;
  using morphism = typename T::morphism;
  using subspace = typename T::subspace;
  using witness = BiproductWitness<T>;

  struct Inclusion {
    std::size_t from = 0;
    morphism m;
  };

  explicit Harness(const CategoryInstance<T>& C, HarnessOptions opt = {}) : C_(C), opt_(opt) {}

  const CategoryInstance<T>& instance() const { return C_; }

  // ---- structure -------------------------------------------------------

  morphism dagger(std::size_t a, std::size_t b, const morphism& f) const {
    if (auto i = C_.find(a, b, f)) {
      auto key = std::tuple{a, b, *i};
      auto it = dagger_cache_.find(key);
      if (it == dagger_cache_.end()) it = dagger_cache_.emplace(key, C_.dagger(a, b, f)).first;
      return it->second;
    }
    return C_.dagger(a, b, f);
  }
  morphism compose(std::size_t a, std::size_t b, std::size_t c, const morphism& g, const morphism& f) const {
    return C_.compose(a, b, c, g, f);
  }
  bool is_dagger_mono(std::size_t a, std::size_t b, const morphism& f) const {
    return compose(a, b, a, dagger(a, b, f), f) == C_.identity(a);
  }
  bool is_dagger_iso(std::size_t a, std::size_t b, const morphism& f) const {
    return is_dagger_mono(a, b, f) && compose(b, a, b, f, dagger(a, b, f)) == C_.identity(b);
  }
  bool is_projection(std::size_t a, const morphism& p) const {
    return compose(a, a, a, p, p) == p && dagger(a, a, p) == p;
  }

  // Mediating morphisms h: carrier → z with h ι_A = f and h ι_B = g.
  // unique means "at most one".
  Mediation<morphism> mediate(const witness& w, std::size_t z, const morphism& f, const morphism& g) const {
    if constexpr (T::full_homs) {
      return T::mediate(C_.obj(w.left), C_.obj(w.right), C_.obj(w.carrier), C_.obj(z), w.inl, w.inr, f, g);
    } else {
      Mediation<morphism> out;
      std::size_t count = 0;
      for (const auto& h : C_.hom(w.carrier, z))
        if (compose(w.left, w.carrier, z, h, w.inl) == f && compose(w.right, w.carrier, z, h, w.inr) == g) {
          if (!out.h) out.h = h;
          ++count;
        }
      out.unique = count <= 1;
      return out;
    }
  }

  // f ⊕ g: w1.carrier → w2.carrier for f: A₁ → B₁, g: A₂ → B₂.
  morphism oplus(const witness& w1, const witness& w2, const morphism& f, const morphism& g) const {
    const auto F = compose(w1.left, w2.left, w2.carrier, w2.inl, f);
    const auto G = compose(w1.right, w2.right, w2.carrier, w2.inr, g);
    auto m = mediate(w1, w2.carrier, F, G);
    if (!m.h || !m.unique)
      throw precondition_failed("no unique mediating morphism for f⊕g from " + w1.label + " to " + w2.label +
                                " (instance not closed)");
    return *m.h;
  }

  // ∇: X ⊕ X → X, the mediator of (id, id).
  morphism codiagonal(const witness& w) const {
    const auto id = C_.identity(w.left);
    auto m = mediate(w, w.left, id, id);
    if (!m.h || !m.unique)
      throw precondition_failed("no unique codiagonal through " + w.label + " (instance not closed)");
    return *m.h;
  }

  // f + g = ∇_Y ∘ (f ⊕ g) ∘ Δ_X with Δ_X = ∇_X*.
  morphism sum(const witness& wx, const witness& wy, const morphism& f, const morphism& g) const {
    const std::size_t x = wx.left;
    const std::size_t y = wy.left;
    const auto delta = dagger(wx.carrier, x, codiagonal(wx));
    const auto fg = oplus(wx, wy, f, g);
    return compose(x, wy.carrier, y, codiagonal(wy), compose(x, wx.carrier, wy.carrier, fg, delta));
  }

  // ---- biproduct witnesses -------------------------------------------

  Report biproduct(const witness& w) const {
    Report r;
    detail::Stopwatch sw(r, "biproduct");
    const std::string p = "biproduct[" + w.label + "].";
    try {
      if constexpr (!T::full_homs) {
        const bool listed = C_.find(w.left, w.carrier, w.inl) && C_.find(w.right, w.carrier, w.inr);
        r.add(p + "listed", listed ? Status::pass : Status::fail, "coprojections present in the hom-sets",
              listed ? "" : "a coprojection is not a listed morphism");
        if (!listed) return r;
      }
      const bool ml = is_dagger_mono(w.left, w.carrier, w.inl);
      r.add(p + "dagger_mono_left", ml ? Status::pass : Status::fail, "ι_A* ∘ ι_A = id",
            ml ? "" : C_.describe(w.left, w.carrier, w.inl));
      const bool mr = is_dagger_mono(w.right, w.carrier, w.inr);
      r.add(p + "dagger_mono_right", mr ? Status::pass : Status::fail, "ι_B* ∘ ι_B = id",
            mr ? "" : C_.describe(w.right, w.carrier, w.inr));
      const bool cross =
          compose(w.left, w.carrier, w.right, dagger(w.right, w.carrier, w.inr), w.inl) == C_.zero(w.left, w.right);
      r.add(p + "cross_term", cross ? Status::pass : Status::fail, "ι_B* ∘ ι_A = 0",
            cross ? "" : "ι_B*∘ι_A = " + C_.describe(compose(w.left, w.carrier, w.right,
                                                            dagger(w.right, w.carrier, w.inr), w.inl)));
      detail::Tally up;
      for (std::size_t z = 0; z < C_.size(); ++z) {
        const auto& hl = C_.hom(w.left, z);
        const auto& hr = C_.hom(w.right, z);
        std::vector<morphism> fs(hl.begin(), hl.end()), gs(hr.begin(), hr.end());
        if constexpr (T::full_homs) {
          fs.push_back(C_.zero(w.left, z));
          gs.push_back(C_.zero(w.right, z));
        }
        const std::size_t cap = fs.size() * gs.size() <= opt_.up_pairs ? fs.size() : opt_.sample;
        for (auto i : detail::spread(fs.size(), cap))
          for (auto j : detail::spread(gs.size(), cap)) {
            const auto m = mediate(w, z, fs[i], gs[j]);
            std::size_t count = m.h ? (m.unique ? 1 : 2) : 0;
            up.record(count == 1, [&] {
              return "into " + C_.name(z) + ": f=" + C_.describe(fs[i]) + ", g=" + C_.describe(gs[j]) + " has " +
                     (count == 0 ? std::string("no") : std::string("several")) + " mediating morphisms";
            });
          }
      }
      r.add(p + "universal_property", up.status(),
            up.detail("(f, g) pairs checked against the listed hom-sets"), up.witness);
    } catch (const std::exception& e) {
      r.add(p + "error", Status::fail, "check aborted", e.what());
    }
    return r;
  }

  bool verified(const witness& w) const {
    const std::string key = witness_key(w);
    auto it = verified_cache_.find(key);
    if (it == verified_cache_.end()) it = verified_cache_.emplace(key, biproduct(w).passed()).first;
    return it->second;
  }

  // Supplied and trivial witnesses, plus canonical ones the theory can build.
  std::vector<witness> candidate_witnesses() const {
    auto out = C_.witnesses();
    if constexpr (requires { T::canonical_biproduct(C_.obj(0), C_.obj(0), C_.obj(0)); }) {
      for (std::size_t a = 0; a < C_.size(); ++a)
        for (std::size_t b = 0; b < C_.size(); ++b)
          for (std::size_t x = 0; x < C_.size(); ++x) {
            if (T::is_zero_object(C_.obj(a)) || T::is_zero_object(C_.obj(b))) continue;
            if (auto p = T::canonical_biproduct(C_.obj(a), C_.obj(b), C_.obj(x)))
              out.push_back({a, b, x, p->first, p->second,
                             C_.name(x) + "=" + C_.name(a) + "⊕" + C_.name(b) + " (canonical)"});
          }
    }
    std::vector<witness> unique;
    std::map<std::string, bool> seen;
    for (auto& w : out)
      if (seen.emplace(witness_key(w), true).second) unique.push_back(std::move(w));
    return unique;
  }

  std::vector<witness> verified_witnesses() const {
    if (!verified_list_) {
      std::vector<witness> out;
      for (const auto& w : candidate_witnesses())
        if (verified(w)) out.push_back(w);
      verified_list_ = std::move(out);
    }
    return *verified_list_;
  }

  // Dagger monos onto s, listed or (for complete hom-sets) constructed.
  std::vector<Inclusion> inclusions_onto(std::size_t x, const subspace& s) const {
    const std::string key = std::to_string(x) + "|" + T::describe(s);
    if (auto it = inclusion_cache_.find(key); it != inclusion_cache_.end()) return it->second;
    std::vector<Inclusion> out;
    for (std::size_t y = 0; y < C_.size(); ++y) {
      bool found = false;
      for (const auto& m : C_.hom(y, x))
        if (T::image(C_.obj(y), C_.obj(x), m) == s && is_dagger_mono(y, x, m)) {
          out.push_back({y, m});
          found = true;
        }
      if constexpr (requires { T::construct_inclusion(C_.obj(y), C_.obj(x), s); }) {
        if (!found)
          if (auto m = T::construct_inclusion(C_.obj(y), C_.obj(x), s); m && is_dagger_mono(y, x, *m))
            out.push_back({y, std::move(*m)});
      }
    }
    inclusion_cache_[key] = out;
    return out;
  }

  struct Split {
    std::optional<witness> found;
    bool inclusions_present = false;
    std::string failure;
  };

  // A verified biproduct X = S ⊕ S⊥ built from inclusions onto S and S⊥.
  Split decomposition(std::size_t x, const subspace& s) const {
    const std::string key = std::to_string(x) + "|" + T::describe(s);
    if (auto it = split_cache_.find(key); it != split_cache_.end()) return it->second;
    Split out;
    const auto sc = T::complement(C_.obj(x), s);
    const auto ia = inclusions_onto(x, s);
    const auto ib = inclusions_onto(x, sc);
    out.inclusions_present = !ia.empty() && !ib.empty();
    if (!out.inclusions_present) {
      out.failure = "no inclusion of " + T::describe(ia.empty() ? s : sc) + " into " + C_.name(x);
    }
    std::size_t tries = 0;
    for (const auto& a : ia) {
      for (const auto& b : ib) {
        if (tries++ >= opt_.pairings) break;
        witness w{a.from, b.from, x, a.m, b.m,
                  C_.name(x) + "=" + T::describe(s) + "⊕" + T::describe(sc)};
        const auto rep = biproduct(w);
        verified_cache_[witness_key(w)] = rep.passed();
        if (rep.passed()) {
          out.found = w;
          break;
        }
        if (out.failure.empty())
          for (const auto& c : rep.checks)
            if (is_failure(c.status)) {
              out.failure = c.name + ": " + c.witness;
              break;
            }
      }
      if (out.found || tries >= opt_.pairings) break;
    }
    split_cache_[key] = out;
    return out;
  }

  // ---- reports ---------------------------------------------------------

  Report category_laws() const {
    Report r;
    detail::Stopwatch sw(r, "category_laws");
    const std::size_t N = C_.size();
    try {
      if constexpr (!T::full_homs) {
        detail::Tally ids, comp, dag;
        for (std::size_t a = 0; a < N; ++a)
          ids.record(C_.find(a, a, C_.identity(a)).has_value(), [&] { return "id_" + C_.name(a) + " not listed"; });
        for (std::size_t a = 0; a < N; ++a)
          for (std::size_t b = 0; b < N; ++b)
            for (const auto& f : C_.hom(a, b)) {
              dag.record(C_.find(b, a, dagger(a, b, f)).has_value(),
                         [&] { return "dagger of " + C_.describe(a, b, f) + " not listed"; });
              for (std::size_t c = 0; c < N; ++c)
                for (const auto& g : C_.hom(b, c))
                  comp.record(C_.find(a, c, compose(a, b, c, g, f)).has_value(), [&] {
                    return C_.describe(b, c, g) + " ∘ " + C_.describe(a, b, f) + " not listed";
                  });
            }
        r.add("laws.identities_listed", ids.status(), ids.detail("objects"), ids.witness);
        r.add("laws.closed_under_composition", comp.status(), comp.detail("composable pairs"), comp.witness);
        r.add("laws.closed_under_dagger", dag.status(), dag.detail("morphisms"), dag.witness);
      } else {
        r.add("laws.closure", Status::not_applicable, "hom-sets are all linear maps; the listed matrices are a sample");
      }

      detail::Tally idl, inv, idd;
      for (std::size_t a = 0; a < N; ++a) {
        idd.record(dagger(a, a, C_.identity(a)) == C_.identity(a), [&] { return "id_" + C_.name(a); });
        for (std::size_t b = 0; b < N; ++b)
          for (const auto& f : C_.hom(a, b)) {
            idl.record(compose(a, a, b, f, C_.identity(a)) == f && compose(a, b, b, C_.identity(b), f) == f,
                       [&] { return C_.describe(a, b, f); });
            inv.record(dagger(b, a, dagger(a, b, f)) == f, [&] { return C_.describe(a, b, f); });
          }
      }
      r.add("laws.identity", idl.status(), idl.detail("morphisms"), idl.witness);
      r.add("laws.dagger_involutive", inv.status(), inv.detail("morphisms"), inv.witness);
      r.add("laws.dagger_identity", idd.status(), idd.detail("objects"), idd.witness);

      std::size_t pairs = 0, triples = 0;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t c = 0; c < N; ++c) {
            const std::size_t ab = C_.hom(a, b).size(), bc = C_.hom(b, c).size();
            pairs += ab * bc;
            for (std::size_t d = 0; d < N; ++d) triples += ab * bc * C_.hom(c, d).size();
          }
      const std::size_t pcap = pairs <= opt_.exhaustive ? SIZE_MAX : opt_.sample;
      const std::size_t tcap = triples <= opt_.exhaustive ? SIZE_MAX : opt_.sample;

      detail::Tally contra, assoc;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t c = 0; c < N; ++c) {
            const auto& F = C_.hom(a, b);
            const auto& G = C_.hom(b, c);
            for (auto i : detail::spread(F.size(), pcap))
              for (auto j : detail::spread(G.size(), pcap)) {
                const auto& f = F[i];
                const auto& g = G[j];
                const auto gf = compose(a, b, c, g, f);
                contra.record(dagger(a, c, gf) == compose(c, b, a, dagger(a, b, f), dagger(b, c, g)),
                              [&] { return C_.describe(b, c, g) + " ∘ " + C_.describe(a, b, f); });
              }
            for (std::size_t d = 0; d < N; ++d) {
              const auto& H = C_.hom(c, d);
              for (auto i : detail::spread(F.size(), tcap))
                for (auto j : detail::spread(G.size(), tcap))
                  for (auto k : detail::spread(H.size(), tcap)) {
                    const auto& f = F[i];
                    const auto& g = G[j];
                    const auto& h = H[k];
                    assoc.record(compose(a, c, d, h, compose(a, b, c, g, f)) ==
                                     compose(a, b, d, compose(b, c, d, h, g), f),
                                 [&] {
                                   return C_.describe(c, d, h) + ", " + C_.describe(b, c, g) + ", " +
                                          C_.describe(a, b, f);
                                 });
                  }
            }
          }
      r.add("laws.dagger_contravariant", contra.status(),
            contra.detail(pcap == SIZE_MAX ? "composable pairs (all)" : "composable pairs (sampled)"),
            contra.witness);
      r.add("laws.associativity", assoc.status(),
            assoc.detail(tcap == SIZE_MAX ? "composable triples (all)" : "composable triples (sampled)"),
            assoc.witness);
    } catch (const std::exception& e) {
      r.add("laws.error", Status::fail, "check aborted", e.what());
    }
    return r;
  }

  Report zero_object() const {
    Report r;
    detail::Stopwatch sw(r, "zero_object");
    const auto z = C_.zero_object();
    if (!z) {
      r.add("zero.present", Status::fail, "the instance has no zero object", "no zero object");
      return r;
    }
    r.add("zero.present", Status::pass, "zero object " + C_.name(*z));
    detail::Tally uniq, zeros;
    for (std::size_t x = 0; x < C_.size(); ++x) {
      if constexpr (!T::full_homs) {
        const auto& in = C_.hom(*z, x);
        const auto& out = C_.hom(x, *z);
        uniq.record(in.size() == 1 && out.size() == 1 && in[0] == C_.zero(*z, x) && out[0] == C_.zero(x, *z), [&] {
          return C_.name(x) + ": " + std::to_string(in.size()) + " maps in, " + std::to_string(out.size()) +
                 " maps out";
        });
      } else {
        uniq.record(C_.zero(*z, x) == C_.zero(*z, x), [] { return std::string(); });
      }
    }
    for (std::size_t a = 0; a < C_.size(); ++a)
      for (std::size_t b = 0; b < C_.size(); ++b) {
        const auto zab = compose(a, *z, b, C_.zero(*z, b), C_.zero(a, *z));
        const bool ok = zab == C_.zero(a, b) && C_.contains(a, b, zab) && dagger(a, b, zab) == C_.zero(b, a);
        zeros.record(ok, [&] { return "0_{" + C_.name(a) + "," + C_.name(b) + "}"; });
      }
    r.add("zero.unique_maps", uniq.status(),
          T::full_homs ? std::string("maps to and from a 0-dimensional space are forced")
                       : uniq.detail("objects with exactly one map to and from zero"),
          uniq.witness);
    r.add("zero.zero_maps", zeros.status(), zeros.detail("zero maps 0_{A,B} composed through zero, with 0* = 0"),
          zeros.witness);
    return r;
  }

  Report supplied_biproducts() const {
    Report r;
    for (const auto& w : C_.supplied_witnesses()) r.append(biproduct(w));
    return r;
  }

  Report oplus_laws() const {
    Report r;
    detail::Stopwatch sw(r, "oplus_laws");
    const auto ws = verified_witnesses();
    detail::Tally exists, dag, iso, ident, copro;
    const auto z = C_.zero_object();
    for (std::size_t p = 0; p < ws.size(); ++p) {
      const auto& w1 = ws[p];
      for (std::size_t q = 0; q < ws.size(); ++q) {
        const auto& w2 = ws[q];
        const auto F = sampled(w1.left, w2.left);
        const auto G = sampled(w1.right, w2.right);
        for (const auto& f : F)
          for (const auto& g : G) {
            const auto pair_name = [&] {
              return C_.describe(f) + " ⊕ " + C_.describe(g) + " via " + w1.label + " → " + w2.label;
            };
            std::optional<morphism> h;
            try {
              h = oplus(w1, w2, f, g);
            } catch (const precondition_failed&) {
            }
            exists.record(h.has_value(), pair_name);
            if (!h) continue;
            std::optional<morphism> hd;
            try {
              hd = oplus(w2, w1, dagger(w1.left, w2.left, f), dagger(w1.right, w2.right, g));
            } catch (const precondition_failed&) {
            }
            dag.record(hd && *hd == dagger(w1.carrier, w2.carrier, *h), pair_name);
            if (is_dagger_iso(w1.left, w2.left, f) && is_dagger_iso(w1.right, w2.right, g))
              iso.record(is_dagger_iso(w1.carrier, w2.carrier, *h), pair_name);
          }
        if (p == q) {
          std::optional<morphism> h;
          try {
            h = oplus(w1, w1, C_.identity(w1.left), C_.identity(w1.right));
          } catch (const precondition_failed&) {
          }
          ident.record(h && *h == C_.identity(w1.carrier), [&] { return "id ⊕ id via " + w1.label; });
        }
      }
      // ι_A = id_A ⊕ 0 through A ≅ A ⊕ 0.
      if (z) {
        const witness trivial{w1.left, *z, w1.left, C_.identity(w1.left), C_.zero(*z, w1.left), "A⊕0"};
        std::optional<morphism> h;
        try {
          h = oplus(trivial, w1, C_.identity(w1.left), C_.zero(*z, w1.right));
        } catch (const precondition_failed&) {
        }
        copro.record(h && *h == w1.inl, [&] { return "ι_A via " + w1.label; });
      }
    }
    const std::string base = std::to_string(ws.size()) + " verified witnesses; ";
    r.add("oplus.exists", exists.status(), base + exists.detail("sums f⊕g"), exists.witness);
    r.add("oplus.dagger", dag.status(), dag.detail("sums with (f⊕g)* = f*⊕g*"), dag.witness);
    r.add("oplus.dagger_iso", iso.status(), iso.detail("sums of dagger isomorphisms"), iso.witness);
    r.add("oplus.identity", ident.status(), ident.detail("witnesses with id⊕id = id"), ident.witness);
    r.add("oplus.coprojection", z ? copro.status() : Status::not_applicable,
          z ? copro.detail("coprojections of the form id⊕0") : std::string("no zero object"), copro.witness);
    return r;
  }

  // X ⊕ X witnesses by object.
  std::map<std::size_t, std::vector<witness>> self_witnesses() const {
    std::map<std::size_t, std::vector<witness>> out;
    for (const auto& w : verified_witnesses())
      if (w.left == w.right) out[w.left].push_back(w);
    return out;
  }

  Report semiadditive() const {
    Report r;
    detail::Stopwatch sw(r, "semiadditive");
    const auto self = self_witnesses();
    detail::Tally comm, assoc, unit, adj, dist, indep, inter, matrix;
    std::string without;
    for (std::size_t x = 0; x < C_.size(); ++x)
      if (!self.count(x)) without += (without.empty() ? "" : ", ") + C_.name(x);
    bool nontrivial = false;
    try {
      for (const auto& [x, wxs] : self)
        for (const auto& [y, wys] : self) {
          if (!T::is_zero_object(C_.obj(x)) && !T::is_zero_object(C_.obj(y))) nontrivial = true;
          const auto& wx = wxs.front();
          const auto& wy = wys.front();
          const auto F = sampled(x, y);
          const auto plus = [&](const morphism& f, const morphism& g) { return sum(wx, wy, f, g); };
          for (const auto& f : F) {
            unit.record(plus(f, C_.zero(x, y)) == f, [&] { return C_.describe(x, y, f); });
            for (const auto& g : F) {
              const auto fg = plus(f, g);
              const auto name = [&] { return C_.describe(x, y, f) + " + " + C_.describe(y == x ? x : x, y, g); };
              comm.record(fg == plus(g, f), name);
              adj.record(dagger(x, y, fg) == sum(wy, wx, dagger(x, y, f), dagger(x, y, g)), name);
              if constexpr (requires { T::add(f, g); }) matrix.record(fg == T::add(f, g), name);
              for (const auto& h : F)
                assoc.record(plus(plus(f, g), h) == plus(f, plus(g, h)), name);
              for (const auto& [zz, wzs] : self)
                for (const auto& k : sampled(y, zz, 3))
                  dist.record(compose(x, y, zz, k, fg) ==
                                  sum(wx, wzs.front(), compose(x, y, zz, k, f), compose(x, y, zz, k, g)),
                              name);
              for (const auto& [ww, wws] : self)
                for (const auto& e : sampled(ww, x, 3))
                  dist.record(compose(ww, x, y, fg, e) ==
                                  sum(wws.front(), wy, compose(ww, x, y, f, e), compose(ww, x, y, g, e)),
                              name);
              for (const auto& wx2 : wxs)
                for (const auto& wy2 : wys) indep.record(sum(wx2, wy2, f, g) == fg, name);
            }
          }
        }
      // (f₁ ⊕ 0) + (0 ⊕ f₂) = f₁ ⊕ f₂ when both carriers have X ⊕ X witnesses.
      const auto ws = verified_witnesses();
      for (const auto& w1 : ws)
        for (const auto& w2 : ws) {
          if (!self.count(w1.carrier) || !self.count(w2.carrier)) continue;
          const auto& s1 = self.at(w1.carrier).front();
          const auto& s2 = self.at(w2.carrier).front();
          for (const auto& f1 : sampled(w1.left, w2.left, 3))
            for (const auto& f2 : sampled(w1.right, w2.right, 3)) {
              const auto lhs = sum(s1, s2, oplus(w1, w2, f1, C_.zero(w1.right, w2.right)),
                                   oplus(w1, w2, C_.zero(w1.left, w2.left), f2));
              inter.record(lhs == oplus(w1, w2, f1, f2), [&] {
                return C_.describe(f1) + " ⊕ " + C_.describe(f2) + " via " + w1.label + " → " + w2.label;
              });
            }
        }
    } catch (const std::exception& e) {
      r.add("semiadditive.error", Status::fail, "check aborted", e.what());
      return r;
    }
    const Status gate = nontrivial ? Status::pass : Status::not_applicable;
    const auto st = [&](const detail::Tally& t) { return t.violations ? Status::fail : gate; };
    const std::string scope =
        nontrivial ? std::string() : "only zero objects have verified X⊕X witnesses; ";
    const std::string missing = without.empty() ? "" : "; no verified X⊕X witness for " + without;
    r.add("semiadditive.commutative", st(comm), scope + comm.detail("pairs") + missing, comm.witness);
    r.add("semiadditive.associative", st(assoc), scope + assoc.detail("triples"), assoc.witness);
    r.add("semiadditive.unit", st(unit), scope + unit.detail("morphisms with f + 0 = f"), unit.witness);
    r.add("semiadditive.distributive", st(dist), scope + dist.detail("composites"), dist.witness);
    r.add("semiadditive.adjoint", st(adj), scope + adj.detail("pairs with (f+g)* = f*+g*"), adj.witness);
    r.add("semiadditive.witness_independent", st(indep), scope + indep.detail("sums across witness choices"),
          indep.witness);
    r.add("semiadditive.interchange", inter.checked ? st(inter) : Status::not_applicable,
          inter.checked ? inter.detail("(f₁⊕0)+(0⊕f₂) = f₁⊕f₂ cases")
                        : std::string("no biproduct whose carriers both have X⊕X witnesses"),
          inter.witness);
    if constexpr (T::full_homs)
      r.add("semiadditive.matrix_sum", st(matrix), scope + matrix.detail("sums equal to the entrywise sum"),
            matrix.witness);
    return r;
  }

  // ---- hypotheses ------------------------------------------------------

  Report hypotheses() const {
    Report r;
    detail::Stopwatch sw(r, "hypotheses");
    const std::size_t N = C_.size();
    const auto z = C_.zero_object();

    {  // H1
      const auto ws = verified_witnesses();
      std::string missing;
      std::size_t pairs = 0, have = 0;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a; b < N; ++b) {
          ++pairs;
          bool found = false;
          for (const auto& w : ws)
            found = found || (w.left == a && w.right == b) || (w.left == b && w.right == a);
          if (found)
            ++have;
          else if (missing.size() < 400)
            missing += (missing.empty() ? "" : "; ") + C_.name(a) + "⊕" + C_.name(b);
        }
      const bool ok = z && have == pairs;
      std::string d = std::to_string(have) + " of " + std::to_string(pairs) + " object pairs have a verified biproduct";
      if (!z) d += "; no zero object (no empty biproduct)";
      r.add("H1", ok ? Status::witnessed : Status::not_witnessed, d, ok ? "" : (z ? missing : "no zero object"));
    }

    {  // H2
      detail::Tally t;
      std::size_t skipped = 0;
      for (std::size_t x = 0; x < N; ++x)
        for (const auto& s : T::subspaces(C_.obj(x))) {
          const auto split = decomposition(x, s);
          if (!split.found && !split.inclusions_present && T::full_homs) {
            ++skipped;  // no isometric copy of s among the objects
            continue;
          }
          t.record(split.found.has_value(),
                   [&] { return C_.name(x) + " with " + T::describe(s) + ": " + split.failure; });
        }
      std::string d = t.detail("subspaces split as verified biproducts");
      if (skipped) d += "; " + std::to_string(skipped) + " subspaces have no isometric copy among the objects";
      r.add("H2", t.status(), d, t.witness);
    }

    std::vector<std::size_t> unital;
    for (std::size_t u = 0; u < N; ++u)
      if (T::is_unital(C_.obj(u))) unital.push_back(u);

    {  // H3a
      detail::Tally t;
      for (auto u : unital)
        for (std::size_t a = 0; a < N; ++a) {
          if (T::is_zero_object(C_.obj(a))) continue;
          for (const auto& m : C_.hom(a, u))
            if (is_dagger_mono(a, u, m))
              t.record(C_.inverse(a, u, m).has_value(),
                       [&] { return "non-invertible dagger mono " + C_.describe(a, u, m); });
        }
      r.add("H3a", t.status(), t.detail("dagger monos into unital objects"), t.witness);
    }
    {  // H3b
      detail::Tally t;
      for (auto u : unital)
        for (auto v : unital) {
          if (v <= u) continue;
          bool found = false;
          for (const auto& m : C_.hom(u, v)) found = found || is_dagger_iso(u, v, m);
          if constexpr (requires { T::construct_inclusion(C_.obj(u), C_.obj(v), T::subspaces(C_.obj(v))[0]); }) {
            if (!found)
              for (const auto& s : T::subspaces(C_.obj(v)))
                if (auto m = T::construct_inclusion(C_.obj(u), C_.obj(v), s)) found = found || is_dagger_iso(u, v, *m);
          }
          t.record(found, [&] { return C_.name(u) + " and " + C_.name(v); });
        }
      r.add("H3b", t.status(), std::to_string(unital.size()) + " unital objects; " + t.detail("pairs"), t.witness);
    }
    {  // H3'
      detail::Tally t;
      for (auto u : unital)
        for (auto v : unital)
          for (const auto& m : C_.hom(u, v))
            if (!(m == C_.zero(u, v)))
              t.record(C_.inverse(u, v, m).has_value(), [&] { return C_.describe(u, v, m); });
      r.add("H3'", t.status(), t.detail("non-zero morphisms between unital objects"), t.witness);
    }
    {  // H4
      detail::Tally t;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
          bool found = false;
          for (const auto& m : C_.hom(a, b)) found = found || is_dagger_mono(a, b, m);
          for (const auto& m : C_.hom(b, a)) found = found || is_dagger_mono(b, a, m);
          if constexpr (T::full_homs) {
            for (const auto& s : T::subspaces(C_.obj(b)))
              if (!found)
                if (auto m = T::construct_inclusion(C_.obj(a), C_.obj(b), s)) found = is_dagger_mono(a, b, *m);
            for (const auto& s : T::subspaces(C_.obj(a)))
              if (!found)
                if (auto m = T::construct_inclusion(C_.obj(b), C_.obj(a), s)) found = is_dagger_mono(b, a, *m);
          }
          t.record(found, [&] { return C_.name(a) + " and " + C_.name(b); });
        }
      r.add("H4", t.status(), t.detail("object pairs"), t.witness);
    }
    {  // H5
      detail::Tally t;
      for (std::size_t x = 0; x < N; ++x) {
        std::vector<morphism> autos, projections;
        for (const auto& m : C_.hom(x, x)) {
          if (is_dagger_iso(x, x, m)) autos.push_back(m);
          if (is_projection(x, m)) projections.push_back(m);
        }
        const auto commutes = [&](const morphism& a, const morphism& p) {
          return compose(x, x, x, a, p) == compose(x, x, x, p, a);
        };
        for (const auto& u : autos) {
          bool found = false;
          for (const auto& v : autos) {
            if (!(compose(x, x, x, v, v) == u)) continue;
            bool strict = true;
            for (const auto& p : projections) strict = strict && commutes(u, p) == commutes(v, p);
            if (strict) {
              found = true;
              break;
            }
          }
          t.record(found, [&] { return "no strict square root of " + C_.describe(x, x, u); });
        }
      }
      r.add("H5", t.status(), t.detail("listed dagger automorphisms"), t.witness);
    }
    return r;
  }

  // ---- derived lemmas --------------------------------------------------

  Report derived_lemmas(const Report* hyps = nullptr) const {
    Report r;
    detail::Stopwatch sw(r, "derived_lemmas");
    Report computed;
    if (!hyps) {
      computed = hypotheses();
      hyps = &computed;
    }
    const auto holds = [&](const char* h) {
      const auto* c = hyps->find(h);
      return c && !is_failure(c->status) && c->status != Status::not_applicable;
    };
    const bool base = holds("H1") && holds("H2") && holds("H3a") && holds("H3b");
    const std::string unmet = "hypotheses H1-H3 not all satisfied by this instance";
    // A violated conclusion only counts against the lemma when its hypotheses hold.
    const auto verdict = [&](CheckResult c, const detail::Tally& t, bool applicable) {
      if (t.violations && !applicable) {
        c.status = Status::not_applicable;
        c.detail += "; conclusion fails here but " + unmet;
      } else {
        c.status = t.status();
      }
      return c;
    };
    const std::size_t N = C_.size();
    try {
      {  // singleton iff unital
        detail::Tally t;
        for (std::size_t x = 0; x < N; ++x)
          if (!T::is_zero_object(C_.obj(x)))
            t.record((T::rank(C_.obj(x)) == 1) == T::is_unital(C_.obj(x)), [&] { return C_.name(x); });
        r.checks.push_back(verdict({"lemma.singleton_iff_unital", {}, t.detail("non-zero objects"), t.witness}, t, base));
      }
      {  // rank n objects are biproducts of n singletons
        std::vector<witness> ws = verified_witnesses();
        for (std::size_t x = 0; x < N; ++x)
          for (const auto& s : T::subspaces(C_.obj(x)))
            if (auto sp = decomposition(x, s); sp.found) ws.push_back(*sp.found);
        std::map<std::size_t, bool> memo;
        std::function<bool(std::size_t)> splits = [&](std::size_t x) {
          const std::size_t n = T::rank(C_.obj(x));
          if (n <= 1) return true;
          if (auto it = memo.find(x); it != memo.end()) return it->second;
          memo[x] = false;
          bool ok = false;
          for (const auto& w : ws)
            if (w.carrier == x && T::rank(C_.obj(w.left)) == 1 && T::rank(C_.obj(w.right)) + 1 == n &&
                splits(w.right))
              ok = true;
          return memo[x] = ok;
        };
        detail::Tally t;
        for (std::size_t x = 0; x < N; ++x)
          if (T::rank(C_.obj(x)) >= 2)
            t.record(splits(x), [&] { return C_.name(x) + " is not an iterated biproduct of singletons"; });
        r.checks.push_back(
            verdict({"lemma.biproduct_of_singletons", {}, t.detail("objects of rank ≥ 2"), t.witness}, t, base));
      }
      r.checks.push_back(partial_isometries(base, verdict));
      {  // Sasaki maps and projections
        detail::Tally sas, proj;
        for (std::size_t x = 0; x < N; ++x)
          for (const auto& s : T::subspaces(C_.obj(x)))
            for (const auto& inc : inclusions_onto(x, s)) {
              const std::size_t y = inc.from;
              const auto& m = inc.m;
              const auto mstar = dagger(y, x, m);
              std::vector<morphism> cands(C_.hom(x, y).begin(), C_.hom(x, y).end());
              if constexpr (T::full_homs) cands.push_back(mstar);
              std::size_t count = 0;
              bool matches = true;
              std::vector<morphism> seen;
              for (const auto& sg : cands) {
                if (std::find(seen.begin(), seen.end(), sg) != seen.end()) continue;
                seen.push_back(sg);
                if (T::is_adjoint(C_.obj(y), C_.obj(x), m, sg) && compose(y, x, y, sg, m) == C_.identity(y)) {
                  ++count;
                  matches = matches && sg == mstar;
                }
              }
              sas.record(count == 1 && matches, [&] {
                return std::to_string(count) + " Sasaki candidates for " + C_.describe(y, x, m);
              });

              const auto pi = compose(x, y, x, m, mstar);
              std::vector<morphism> pcands(C_.hom(x, x).begin(), C_.hom(x, x).end());
              if constexpr (T::full_homs) pcands.push_back(pi);
              count = 0;
              matches = true;
              seen.clear();
              for (const auto& p : pcands) {
                if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
                seen.push_back(p);
                if (is_projection(x, p) && T::image(C_.obj(x), C_.obj(x), p) == s) {
                  ++count;
                  matches = matches && p == pi;
                }
              }
              proj.record(count == 1 && matches, [&] {
                return std::to_string(count) + " projections onto " + T::describe(s) + " in " + C_.name(x);
              });
            }
        r.checks.push_back(verdict({"lemma.sasaki_unique", {}, sas.detail("inclusions"), sas.witness}, sas, base));
        r.checks.push_back(
            verdict({"lemma.projection_unique", {}, proj.detail("inclusions"), proj.witness}, proj, base));
      }
      {  // transitivity on orthogonal pairs
        detail::Tally t;
        for (std::size_t x = 0; x < N; ++x)
          for (const auto& [p, q] : T::orthogonal_points(C_.obj(x))) {
            bool found = false;
            for (const auto& f : C_.hom(x, x))
              if (is_dagger_iso(x, x, f) && T::swaps(C_.obj(x), f, p, q)) {
                found = true;
                break;
              }
            t.record(found, [&] {
              return C_.name(x) + ": no listed dagger automorphism swaps " + std::to_string(p) + " and " +
                     std::to_string(q);
            });
          }
        r.checks.push_back(verdict({"lemma.transitivity", {}, t.detail("orthogonal pairs"), t.witness}, t, base));
      }
      {  // f ⊕ g ∥ id implies f = g on a singleton
        detail::Tally t;
        std::size_t parallel = 0;
        for (const auto& [i, wis] : self_witnesses()) {
          if (T::rank(C_.obj(i)) != 1) continue;
          const auto& w = wis.front();
          for (const auto& f : C_.hom(i, i))
            for (const auto& g : C_.hom(i, i)) {
              const auto h = oplus(w, w, f, g);
              if (!T::parallel_to_identity(C_.obj(w.carrier), h)) continue;
              ++parallel;
              t.record(f == g, [&] { return C_.describe(f) + " ⊕ " + C_.describe(g) + " ∥ id"; });
            }
        }
        CheckResult c{"lemma.sums_parallel", {}, t.detail("pairs with f⊕g ∥ id"), t.witness};
        if (t.checked == 0) {
          c.status = Status::not_applicable;
          c.detail = "no singleton with a verified I⊕I witness";
          r.checks.push_back(c);
        } else {
          r.checks.push_back(verdict(c, t, base && holds("H3'")));
        }
      }
      if constexpr (requires { T::is_orthoisomorphism(C_.obj(0), C_.obj(0), C_.identity(0)); }) {
        detail::Tally iso, perp;
        for (std::size_t a = 0; a < N; ++a)
          for (std::size_t b = 0; b < N; ++b)
            for (const auto& f : C_.hom(a, b)) {
              if (is_dagger_iso(a, b, f))
                iso.record(T::is_orthoisomorphism(C_.obj(a), C_.obj(b), f), [&] { return C_.describe(a, b, f); });
              if (is_dagger_mono(a, b, f))
                perp.record(T::preserves_reflects_perp(C_.obj(a), C_.obj(b), f),
                            [&] { return C_.describe(a, b, f); });
            }
        r.checks.push_back(
            verdict({"lemma.dagger_iso_is_orthoiso", {}, iso.detail("dagger isomorphisms"), iso.witness}, iso, base));
        r.checks.push_back(
            verdict({"lemma.dagger_mono_preserves_perp", {}, perp.detail("dagger monos"), perp.witness}, perp, base));
      }
    } catch (const std::exception& e) {
      r.add("lemma.error", Status::fail, "check aborted", e.what());
    }
    return r;
  }

  // Four independent readings of "partial isometry", compared on every
  // listed morphism: (a) f f* f = f; (b) the theory's own notion; (c) f is
  // h ⊕ 0 through verified splittings of domain and codomain; (d) f is
  // ι_B h ι_A* for dagger monos onto the supports. (c) is undetermined when
  // the instance lacks the splittings it needs.
  template <class Verdict>
  CheckResult partial_isometries(bool applicable, const Verdict& verdict) const {
    detail::Tally t;
    std::size_t undetermined = 0, positive = 0;
    const std::size_t N = C_.size();
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y)
        for (const auto& f : C_.hom(x, y)) {
          const auto fs = dagger(x, y, f);
          const bool a = compose(x, y, y, f, compose(x, y, x, fs, f)) == f;
          const bool b = T::partial_orthometry(C_.obj(x), C_.obj(y), f, fs);
          const auto A = T::image(C_.obj(y), C_.obj(x), fs);
          const auto B = T::image(C_.obj(x), C_.obj(y), f);

          std::optional<bool> d;
          const auto ia = inclusions_onto(x, A);
          const auto ib = inclusions_onto(y, B);
          if (!ia.empty() && !ib.empty()) {
            d = false;
            for (const auto& m : ia)
              for (const auto& n : ib) {
                const auto h = compose(m.from, x, n.from, dagger(n.from, y, n.m), compose(m.from, x, y, f, m.m));
                if (is_dagger_iso(m.from, n.from, h) &&
                    compose(x, n.from, y, n.m, compose(x, m.from, n.from, h, dagger(m.from, x, m.m))) == f)
                  d = true;
              }
          } else if (!T::full_homs) {
            d = false;  // hom-sets are complete, so no dagger mono has that image
          }

          std::optional<bool> c;
          const auto sx = decomposition(x, A);
          const auto sy = decomposition(y, B);
          if (sx.found && sy.found) {
            const auto& wx = *sx.found;
            const auto& wy = *sy.found;
            const auto h = compose(wx.left, x, wy.left, dagger(wy.left, y, wy.inl), compose(wx.left, x, y, f, wx.inl));
            c = is_dagger_iso(wx.left, wy.left, h) &&
                compose(wx.left, x, y, f, wx.inl) == compose(wx.left, wy.left, y, wy.inl, h) &&
                compose(wx.right, x, y, f, wx.inr) == C_.zero(wx.right, y);
          }
          if (!c) ++undetermined;
          if (a) ++positive;
          const bool agree = a == b && (!d || *d == a) && (!c || *c == a);
          t.record(agree, [&] {
            auto yn = [](std::optional<bool> v) { return v ? (*v ? "yes" : "no") : "undetermined"; };
            return C_.describe(x, y, f) + ": (a) " + (a ? "yes" : "no") + ", (b) " + (b ? "yes" : "no") + ", (c) " +
                   yn(c) + ", (d) " + yn(d);
          });
        }
    std::string d = t.detail("morphisms classified four ways") + ", " + std::to_string(positive) +
                    " partial isometries";
    if (undetermined) d += ", (c) undetermined on " + std::to_string(undetermined) + " (splittings not verified)";
    return verdict(CheckResult{"lemma.partial_isometry", {}, d, t.witness}, t, applicable);
  }

 private:
  std::vector<morphism> sampled(std::size_t a, std::size_t b, std::size_t cap = 0) const {
    const auto& h = C_.hom(a, b);
    std::vector<morphism> out;
    for (auto i : detail::spread(h.size(), cap ? cap : opt_.sample)) out.push_back(h[i]);
    if constexpr (T::full_homs)
      if (out.empty()) out.push_back(C_.zero(a, b));
    return out;
  }

  std::string witness_key(const witness& w) const {
    return std::to_string(w.left) + "," + std::to_string(w.right) + "," + std::to_string(w.carrier) + ":" +
           T::describe(w.inl) + "|" + T::describe(w.inr);
  }

  const CategoryInstance<T>& C_;
  HarnessOptions opt_;
  mutable std::map<std::tuple<std::size_t, std::size_t, std::size_t>, morphism> dagger_cache_;
  mutable std::map<std::string, bool> verified_cache_;
  mutable std::optional<std::vector<witness>> verified_list_;
  mutable std::map<std::string, Split> split_cache_;
  mutable std::map<std::string, std::vector<Inclusion>> inclusion_cache_;
};

// ---- free-function entry points -------------------------------------------

template <Theory T>
Report verify_category_laws(const CategoryInstance<T>& C, HarnessOptions opt = {}) {
  return Harness<T>(C, opt).category_laws();
}
template <Theory T>
Report verify_zero_object(const CategoryInstance<T>& C) {
  return Harness<T>(C).zero_object();
}
template <Theory T>
Report verify_dagger_biproduct(const CategoryInstance<T>& C, const BiproductWitness<T>& w, HarnessOptions opt = {}) {
  return Harness<T>(C, opt).biproduct(w);
}
template <Theory T>
typename T::morphism oplus_map(const CategoryInstance<T>& C, const BiproductWitness<T>& w1,
                               const BiproductWitness<T>& w2, const typename T::morphism& f,
                               const typename T::morphism& g) {
  return Harness<T>(C).oplus(w1, w2, f, g);
}
template <Theory T>
Report verify_oplus_laws(const CategoryInstance<T>& C, HarnessOptions opt = {}) {
  return Harness<T>(C, opt).oplus_laws();
}
template <Theory T>
typename T::morphism semiadditive_sum(const CategoryInstance<T>& C, const BiproductWitness<T>& wx,
                                      const BiproductWitness<T>& wy, const typename T::morphism& f,
                                      const typename T::morphism& g) {
  return Harness<T>(C).sum(wx, wy, f, g);
}
template <Theory T>
Report verify_semiadditive(const CategoryInstance<T>& C, HarnessOptions opt = {}) {
  return Harness<T>(C, opt).semiadditive();
}
template <Theory T>
Report check_hypotheses(const CategoryInstance<T>& C, HarnessOptions opt = {}) {
  return Harness<T>(C, opt).hypotheses();
}
template <Theory T>
Report verify_derived_lemmas(const CategoryInstance<T>& C, HarnessOptions opt = {}) {
  return Harness<T>(C, opt).derived_lemmas();
}

// Everything the CLI's `category check` runs, sharing one cache.
template <Theory T>
Report check_instance(const CategoryInstance<T>& C, bool with_hypotheses, bool with_lemmas, HarnessOptions opt = {}) {
  Harness<T> h(C, opt);
  Report r;
  r.append(h.category_laws());
  r.append(h.zero_object());
  r.append(h.supplied_biproducts());
  r.append(h.oplus_laws());
  r.append(h.semiadditive());
  Report hyps;
  if (with_hypotheses || with_lemmas) hyps = h.hypotheses();
  if (with_hypotheses) r.append(hyps);
  if (with_lemmas) r.append(h.derived_lemmas(&hyps));
  return r;
}

}  // namespace orthokit::dagger
