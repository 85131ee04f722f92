#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "orthokit/error.hpp"

namespace orthokit::dagger {

// What the harness needs from a kind of object and morphism.
template <class T>
concept Theory = requires(const typename T::object& a, const typename T::morphism& f) {
  typename T::subspace;
  { T::name } -> std::convertible_to<const char*>;
  { T::full_homs } -> std::convertible_to<bool>;
  { T::compose(a, a, a, f, f) } -> std::same_as<typename T::morphism>;
  { T::dagger(a, a, f) } -> std::same_as<typename T::morphism>;
  { T::identity(a) } -> std::same_as<typename T::morphism>;
  { T::zero(a, a) } -> std::same_as<typename T::morphism>;
  { T::is_zero_object(a) } -> std::same_as<bool>;
  { T::is_unital(a) } -> std::same_as<bool>;
  { T::describe(f) } -> std::convertible_to<std::string>;
};

template <class T>
struct BiproductWitness {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t carrier = 0;
  typename T::morphism inl;  // left → carrier
  typename T::morphism inr;  // right → carrier
  std::string label;
};

// A finite, explicitly listed approximation of a dagger category. Hom-sets
// are lists; every universal-property check is relative to them.
template <Theory T>
class CategoryInstance {
 public:
  using theory = T;
  using object = typename T::object;
  using morphism = typename T::morphism;

  std::size_t add_object(object o, std::string name) {
    objects_.push_back(std::move(o));
    names_.push_back(std::move(name));
    const std::size_t n = objects_.size();
    std::vector<std::vector<morphism>> grown(n * n);
    for (std::size_t a = 0; a + 1 < n; ++a)
      for (std::size_t b = 0; b + 1 < n; ++b) grown[a * n + b] = std::move(homs_[a * (n - 1) + b]);
    homs_ = std::move(grown);
    return n - 1;
  }

  // Returns the index of m in hom(a, b), adding it if new.
  std::size_t add_morphism(std::size_t a, std::size_t b, morphism m) {
    auto& h = homs_.at(a * size() + b);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] == m) return i;
    h.push_back(std::move(m));
    return h.size() - 1;
  }

  // Overrides the theory's dagger: hom(a,b)[i]* = hom(b,a)[j].
  void set_dagger(std::size_t a, std::size_t b, std::size_t i, std::size_t j) { dagger_[{a, b, i}] = j; }
  bool has_explicit_dagger() const { return !dagger_.empty(); }

  void add_witness(BiproductWitness<T> w) { witnesses_.push_back(std::move(w)); }
  const std::vector<BiproductWitness<T>>& supplied_witnesses() const { return witnesses_; }

  // Supplied witnesses plus X ≅ X ⊕ 0 and X ≅ 0 ⊕ X for each X when a zero
  // object is present.
  std::vector<BiproductWitness<T>> witnesses() const {
    auto out = witnesses_;
    if (auto z = zero_object()) {
      for (std::size_t x = 0; x < size(); ++x) {
        out.push_back({x, *z, x, identity(x), zero(*z, x), names_[x] + "=" + names_[x] + "⊕0"});
        out.push_back({*z, x, x, zero(*z, x), identity(x), names_[x] + "=0⊕" + names_[x]});
      }
    }
    return out;
  }

  std::size_t size() const { return objects_.size(); }
  const object& obj(std::size_t a) const { return objects_.at(a); }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::vector<morphism>& hom(std::size_t a, std::size_t b) const { return homs_.at(a * size() + b); }

  std::optional<std::size_t> find(std::size_t a, std::size_t b, const morphism& m) const {
    const auto& h = hom(a, b);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] == m) return i;
    return std::nullopt;
  }

  // Membership in the (conceptual) hom-set: listed, or any well-formed
  // morphism when the theory's hom-sets are complete by construction.
  bool contains(std::size_t a, std::size_t b, const morphism& m) const {
    if constexpr (T::full_homs) return true;
    return find(a, b, m).has_value();
  }

  // g ∘ f for f: a → b, g: b → c.
  morphism compose(std::size_t a, std::size_t b, std::size_t c, const morphism& g, const morphism& f) const {
    return T::compose(obj(a), obj(b), obj(c), g, f);
  }

  morphism dagger(std::size_t a, std::size_t b, const morphism& f) const {
    if (!dagger_.empty()) {
      if (auto i = find(a, b, f)) {
        auto it = dagger_.find({a, b, *i});
        if (it != dagger_.end()) return hom(b, a).at(it->second);
      }
    }
    return T::dagger(obj(a), obj(b), f);
  }

  morphism identity(std::size_t a) const { return T::identity(obj(a)); }
  morphism zero(std::size_t a, std::size_t b) const { return T::zero(obj(a), obj(b)); }

  std::optional<std::size_t> zero_object() const {
    for (std::size_t a = 0; a < size(); ++a)
      if (T::is_zero_object(obj(a))) return a;
    return std::nullopt;
  }

  bool is_dagger_mono(std::size_t a, std::size_t b, const morphism& f) const {
    return compose(a, b, a, dagger(a, b, f), f) == identity(a);
  }
  bool is_dagger_iso(std::size_t a, std::size_t b, const morphism& f) const {
    return is_dagger_mono(a, b, f) && compose(b, a, b, f, dagger(a, b, f)) == identity(b);
  }
  bool is_projection(std::size_t a, const morphism& p) const {
    return compose(a, a, a, p, p) == p && dagger(a, a, p) == p;
  }

  // Some inverse of f inside the instance.
  std::optional<morphism> inverse(std::size_t a, std::size_t b, const morphism& f) const {
    if constexpr (requires { T::inverse(obj(a), obj(b), f); }) {
      return T::inverse(obj(a), obj(b), f);
    } else {
      for (const auto& g : hom(b, a))
        if (compose(a, b, a, g, f) == identity(a) && compose(b, a, b, f, g) == identity(b)) return g;
      return std::nullopt;
    }
  }

  std::string describe(const morphism& m) const { return T::describe(m); }
  std::string describe(std::size_t a, std::size_t b, const morphism& m) const {
    return names_[a] + "→" + names_[b] + " " + T::describe(m);
  }

 private:
  std::vector<object> objects_;
  std::vector<std::string> names_;
  std::vector<std::vector<morphism>> homs_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> dagger_;
  std::vector<BiproductWitness<T>> witnesses_;
};

}  // namespace orthokit::dagger
