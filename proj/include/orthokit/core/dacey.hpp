#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orthokit/core/orthoset.hpp"

namespace orthokit {

enum class DaceyCriterion { a, b, c, d, e };
inline constexpr std::array<DaceyCriterion, 5> all_dacey_criteria{DaceyCriterion::a, DaceyCriterion::b,
                                                                 DaceyCriterion::c, DaceyCriterion::d,
                                                                 DaceyCriterion::e};

inline char criterion_letter(DaceyCriterion c) { return static_cast<char>('a' + static_cast<int>(c)); }

struct CriterionResult {
  bool holds = true;
  std::string witness;  // empty when the criterion holds
};

struct DaceyReport {
  std::array<std::optional<CriterionResult>, 5> results;

  bool evaluated(DaceyCriterion c) const { return results[static_cast<int>(c)].has_value(); }
  const CriterionResult& at(DaceyCriterion c) const { return *results[static_cast<int>(c)]; }

  // True when every evaluated criterion gives the same answer.
  bool consistent() const {
    std::optional<bool> seen;
    for (const auto& r : results) {
      if (!r) continue;
      if (seen && *seen != r->holds) return false;
      seen = r->holds;
    }
    return true;
  }

  // The common answer; only meaningful when consistent().
  bool value() const {
    for (const auto& r : results)
      if (r) return r->holds;
    return true;
  }
};

namespace detail {

inline CriterionResult fail(std::string w) { return {false, std::move(w)}; }

// (a) Families of pairwise orthogonal subspaces whose join is X are
// decompositions. A bad family yields a bad pair (A_i, join of the rest), and a
// bad pair is itself a bad family, so pairs suffice.
inline CriterionResult dacey_a(const FiniteOrthoset& X, const std::vector<Subset>& cx) {
  for (Subset A : cx) {
    const Subset Ac = ortho_complement(X, A);
    for (Subset B : cx) {
      if (!A.subset_of(ortho_complement(X, B))) continue;
      if (join(X, A, B) != X.full()) continue;
      if (A != ortho_complement(X, B) || B != Ac)
        return fail("A=" + A.to_string() + " B=" + B.to_string() + " are orthogonal, join to X, but A != B⊥");
    }
  }
  return {};
}

// (b) Orthomodularity of C(X).
inline CriterionResult dacey_b(const FiniteOrthoset& X, const std::vector<Subset>& cx) {
  for (Subset A : cx) {
    const Subset Ac = ortho_complement(X, A);
    for (Subset B : cx) {
      if (!A.subset_of(B)) continue;
      if (join(X, A, B & Ac) != B)
        return fail("A=" + A.to_string() + " ⊆ B=" + B.to_string() + " but A ∨ (B ∧ A⊥) != B");
    }
  }
  return {};
}

// (c) Inside each subspace A, the relative double complement agrees with the
// global one. Both sides depend on B only through B⊥⊥, so B ranges over C(X).
inline CriterionResult dacey_c(const FiniteOrthoset& X, const std::vector<Subset>& cx) {
  for (Subset A : cx) {
    for (Subset B : cx) {
      if (!B.subset_of(A)) continue;
      const Subset rel = ortho_complement(X, ortho_complement(X, B) & A) & A;
      if (rel != B)
        return fail("A=" + A.to_string() + " B=" + B.to_string() + " relative closure " + rel.to_string());
    }
  }
  return {};
}

// (d) C(A), computed on A as an orthoset in its own right, is the down-set of A.
inline CriterionResult dacey_d(const FiniteOrthoset& X, const std::vector<Subset>& cx, const Limits& limits) {
  for (Subset A : cx) {
    const Restriction sub = restrict_to(X, A);
    std::vector<Subset> local;
    for (Subset s : enumerate_orthoclosed(sub.orthoset, limits)) {
      Subset lifted;
      s.for_each([&](std::size_t i) { lifted.insert(sub.embedding[i]); });
      local.push_back(lifted);
    }
    std::sort(local.begin(), local.end());
    std::vector<Subset> below;
    for (Subset B : cx)
      if (B.subset_of(A)) below.push_back(B);
    if (local != below) return fail("A=" + A.to_string() + " has C(A) != {B ∈ C(X) : B ⊆ A}");
  }
  return {};
}

// Bron-Kerbosch with pivoting over the ⊥ graph; calls f on each maximal clique.
template <class F>
bool each_maximal_clique(const FiniteOrthoset& X, Subset R, Subset P, Subset Xs, F& f) {
  if (P.empty() && Xs.empty()) return f(R);
  const Subset PX = P | Xs;
  std::size_t pivot = PX.first();
  std::size_t best = 0;
  PX.for_each([&](std::size_t u) {
    const std::size_t c = (P & X.row(u)).size();
    if (c >= best) { best = c; pivot = u; }
  });
  const Subset candidates = P - X.row(pivot);
  bool go_on = true;
  candidates.for_each([&](std::size_t v) {
    if (!go_on) return;
    Subset Rv = R;
    Rv.insert(v);
    const Subset nb = X.row(v).proper();
    go_on = each_maximal_clique(X, Rv, P & nb, Xs & nb, f);
    P.erase(v);
    Xs.insert(v);
  });
  return go_on;
}

// (e) Every maximal ⊥-set D inside a subspace A satisfies D⊥⊥ = A.
inline CriterionResult dacey_e(const FiniteOrthoset& X, const std::vector<Subset>& cx) {
  CriterionResult out;
  for (Subset A : cx) {
    auto check = [&](Subset D) {
      if (closure(X, D) == A) return true;
      out = fail("A=" + A.to_string() + " contains maximal ⊥-set D=" + D.to_string() + " with D⊥⊥=" +
                 closure(X, D).to_string());
      return false;
    };
    if (!each_maximal_clique(X, Subset{}, A.proper(), Subset{}, check)) return out;
  }
  return out;
}

}  // namespace detail

inline CriterionResult dacey_criterion(const FiniteOrthoset& X, DaceyCriterion c,
                                       const std::vector<Subset>& cx, const Limits& limits = {}) {
  switch (c) {
    case DaceyCriterion::a: return detail::dacey_a(X, cx);
    case DaceyCriterion::b: return detail::dacey_b(X, cx);
    case DaceyCriterion::c: return detail::dacey_c(X, cx);
    case DaceyCriterion::d: return detail::dacey_d(X, cx, limits);
    case DaceyCriterion::e: return detail::dacey_e(X, cx);
  }
  return {};
}

// Evaluates the requested criteria; an empty list means all five.
inline DaceyReport dacey_check(const FiniteOrthoset& X, std::vector<DaceyCriterion> which = {},
                               const Limits& limits = {}) {
  if (which.empty()) which.assign(all_dacey_criteria.begin(), all_dacey_criteria.end());
  const auto cx = enumerate_orthoclosed(X, limits);
  DaceyReport report;
  for (auto c : which) report.results[static_cast<int>(c)] = dacey_criterion(X, c, cx, limits);
  return report;
}

inline bool is_dacey(const FiniteOrthoset& X, const Limits& limits = {}) {
  return dacey_check(X, {DaceyCriterion::b}, limits).value();
}

}  // namespace orthokit
