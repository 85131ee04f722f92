#pragma once

// The acceptance criteria as runnable checks. Sample sizes, seeds and time
// budgets are pinned here; a criterion passes only with zero discrepancies
// inside its budget.

#include <chrono>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orthokit/core/dacey.hpp"
#include "orthokit/core/rank.hpp"
#include "orthokit/dagger/harness.hpp"
#include "orthokit/dagger/instances.hpp"
#include "orthokit/hermitian/checks.hpp"
#include "orthokit/hermitian/lines.hpp"
#include "orthokit/maps/ortho_map.hpp"
#include "orthokit/report.hpp"
#include "orthokit/suite/generators.hpp"
#include "orthokit/suite/oracles.hpp"

namespace orthokit::acceptance {

namespace pins {
inline constexpr std::uint64_t seed = 20240611;

inline constexpr std::size_t dacey_exhaustive_max_n = 6;
inline constexpr std::size_t dacey_random = 10'000;
inline constexpr std::size_t dacey_random_max_n = 12;
inline constexpr double dacey_budget_s = 120;

inline constexpr std::size_t adjoint_exhaustive_max = 4;
inline constexpr std::size_t adjoint_random = 10'000;
inline constexpr std::size_t adjoint_random_max_n = 8;
inline constexpr double adjoint_budget_s = 120;

inline constexpr std::size_t projection_fixture_max_n = 5;

inline constexpr std::size_t orthomodular_max_dim = 5;
inline constexpr std::size_t orthomodular_nonstandard_grams = 3;
inline constexpr std::size_t orthomodular_subspaces = 1'000;
inline constexpr double orthomodular_budget_s = 60;

inline constexpr std::size_t bridge_matrices = 1'000;
inline constexpr std::size_t bridge_max_dim = 4;
inline constexpr std::size_t bridge_pairs = 100;

inline constexpr std::size_t semiadditive_pairs = 1'000;

inline constexpr int root_grid = 4;  // numerators and denominators in [-4, 4]

inline constexpr double harness_budget_s = 60;

inline constexpr std::size_t sample_draws = 200;
}  // namespace pins

namespace detail {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Counts cases and keeps the first discrepancy.
struct Count {
  std::size_t cases = 0;
  std::size_t bad = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (bad++ == 0) first = what();
  }
};

inline std::string table_text(const std::vector<std::size_t>& t) { return dagger::OrthosetTheory::describe(t); }

inline CheckResult finish(std::string name, const Count& c, std::string detail, const Timer& t, double budget_s,
                          Report& r) {
  const double s = t.seconds();
  r.timing_ms[name] = s * 1000;
  Status st = c.bad == 0 ? Status::pass : Status::fail;
  std::string witness = c.first;
  if (budget_s > 0 && s > budget_s) {
    st = Status::fail;
    if (witness.empty()) witness = "time budget of " + std::to_string(static_cast<int>(budget_s)) + " s exceeded";
  }
  detail += "; " + std::to_string(c.bad) + " discrepancies in " + std::to_string(c.cases) + " cases";
  return r.add(std::move(name), st, std::move(detail), std::move(witness));
}

}  // namespace detail

// 1. Dacey criteria (a)-(e) agree.
inline CheckResult dacey_equivalence(Report& r) {
  detail::Timer t;
  detail::Count c;
  const auto check = [&](const FiniteOrthoset& X) {
    const auto d = dacey_check(X);
    c.check(d.consistent(), [&] {
      std::string s = "n=" + std::to_string(X.size()) + " edges";
      for (auto [i, j] : X.edges()) s += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      return s + ": criteria disagree";
    });
  };
  std::size_t canonical = 0;
  for (std::size_t n = 1; n <= pins::dacey_exhaustive_max_n; ++n)
    for (const auto& X : oracle::all_canonical(n)) {
      check(X);
      ++canonical;
    }
  std::mt19937_64 rng(pins::seed);
  std::uniform_int_distribution<std::size_t> size(1, pins::dacey_random_max_n);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (std::size_t k = 0; k < pins::dacey_random; ++k) check(oracle::random_orthoset(rng, size(rng), density(rng)));
  return detail::finish("criterion.1.dacey_equivalence", c,
                        std::to_string(canonical) + " canonical orthosets with n<=6 and " +
                            std::to_string(pins::dacey_random) + " random with n<=12",
                        t, pins::dacey_budget_s, r);
}

// 2 and 3. Synthesis succeeds iff brute force finds an adjoint; every
// synthesized pair is adjoint and satisfies the kernel-image duality.
struct AdjointCounts {
  CheckResult synthesis;
  CheckResult duality;
};

inline AdjointCounts adjoint_synthesis(Report& r) {
  detail::Timer t;
  detail::Count synth, dual;
  std::size_t adjointable = 0;
  const auto check = [&](const FiniteOrthoset& X, const FiniteOrthoset& Y, const std::vector<std::size_t>& f,
                         bool exhaustive) {
    const OrthoMap m(X, Y, f);
    const auto res = synthesize_adjoint(m);
    const auto* pair = std::get_if<AdjointPair>(&res);
    const bool brute = exhaustive ? oracle::count_adjoints_exhaustive(X, Y, f) > 0
                                  : oracle::brute_force_adjoint(X, Y, f).has_value();
    synth.check((pair != nullptr) == brute && (!pair || is_adjoint_pair(pair->f, pair->g)), [&] {
      return "f=" + detail::table_text(f) + " |X|=" + std::to_string(X.size()) + " |Y|=" + std::to_string(Y.size()) +
             (pair ? ": synthesized" : ": not synthesized") + (brute ? ", brute force found one" : ", brute force found none");
    });
    if (!pair) return;
    ++adjointable;
    const auto& g = pair->g;
    dual.check(kernel(m) == ortho_complement(X, image(g)) && kernel(g) == ortho_complement(Y, image(m)),
               [&] { return "f=" + detail::table_text(f) + ", f*=" + detail::table_text(g.table()); });
  };

  std::vector<FiniteOrthoset> small;
  for (std::size_t n = 1; n <= pins::adjoint_exhaustive_max; ++n)
    for (const auto& X : oracle::all_labelled(n)) small.push_back(X);
  for (const auto& X : small)
    for (const auto& Y : small)
      oracle::for_each_table(X.size(), Y.size(), [&](const std::vector<std::size_t>& f) { check(X, Y, f, true); });
  const std::size_t exhaustive = synth.cases;

  // Random tables are almost never adjointable, so half the random cases are
  // composites of Sasaki projections, which are.
  std::mt19937_64 rng(pins::seed + 2);
  std::uniform_int_distribution<std::size_t> size(pins::adjoint_exhaustive_max + 1, pins::adjoint_random_max_n);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  for (std::size_t k = 0; k < pins::adjoint_random; ++k) {
    const auto X = oracle::random_orthoset(rng, size(rng), density(rng));
    if (k % 2 == 0) {
      const auto Y = oracle::random_orthoset(rng, size(rng), density(rng));
      std::vector<std::size_t> f(X.size(), 0);
      for (std::size_t x = 1; x < X.size(); ++x) f[x] = rng() % Y.size();
      check(X, Y, f, false);
    } else {
      const auto ps = oracle::projections_by_sasaki(X);
      const std::vector<std::vector<std::size_t>> list(ps.begin(), ps.end());
      auto f = list[rng() % list.size()];
      const auto& p = list[rng() % list.size()];
      for (auto& v : f) v = p[v];
      check(X, X, f, false);
    }
  }
  AdjointCounts out;
  out.synthesis = detail::finish("criterion.2.adjoint_synthesis", synth,
                                 std::to_string(exhaustive) + " exhaustive tables with |X|,|Y|<=4 and " +
                                     std::to_string(pins::adjoint_random) + " random cases with |X|,|Y|<=8",
                                 t, pins::adjoint_budget_s, r);
  // shares the run of criterion 2
  out.duality = detail::finish("criterion.3.kernel_image_duality", dual,
                               std::to_string(adjointable) + " adjoint pairs from criterion 2", t, 0, r);
  return out;
}

// 4. "Idempotent, self-adjoint, orthoclosed image" is exactly "ι ∘ Sasaki".
inline CheckResult projection_equivalence(Report& r) {
  detail::Timer t;
  detail::Count c;
  std::vector<FiniteOrthoset> fixtures{mo2()};
  for (std::size_t n = 1; n <= pins::projection_fixture_max_n; ++n)
    for (const auto& X : oracle::all_canonical(n))
      if (is_atomistic(X) && is_dacey(X)) fixtures.push_back(X);
  std::size_t projections = 0;
  for (const auto& X : fixtures) {
    const auto by_sasaki = oracle::projections_by_sasaki(X);
    oracle::for_each_table(X.size(), X.size(), [&](const std::vector<std::size_t>& f) {
      const OrthoMap m(X, X, f);
      const bool label = is_adjoint_pair(m, m) && compose(m, m) == m && is_orthoclosed(X, image(m));
      projections += label;
      c.check(label == (by_sasaki.count(f) > 0), [&] {
        return "n=" + std::to_string(X.size()) + " f=" + detail::table_text(f) +
               (label ? ": projection label but no Sasaki factorization" : ": Sasaki factorization but no projection label");
      });
    });
  }
  return detail::finish("criterion.4.projection_equivalence", c,
                        "MO2 and " + std::to_string(fixtures.size() - 1) +
                            " atomistic Dacey orthosets with n<=5, " + std::to_string(projections) + " projections",
                        t, 0, r);
}

// 5. S + S⊥ = H and S ∩ S⊥ = 0 exactly.
inline CheckResult exact_orthomodularity(Report& r) {
  detail::Timer t;
  detail::Count c;
  std::mt19937_64 rng(pins::seed + 5);
  std::size_t spaces = 0;
  const auto run = [&]<class S>(S) {
    for (std::size_t n = 1; n <= pins::orthomodular_max_dim; ++n) {
      std::vector<HermitianSpace<S>> hs{HermitianSpace<S>::standard(n)};
      for (std::size_t k = 0; k < pins::orthomodular_nonstandard_grams; ++k)
        hs.emplace_back(gen::positive_gram<S>(rng, n));
      for (const auto& H : hs) {
        ++spaces;
        for (std::size_t k = 0; k < pins::orthomodular_subspaces; ++k) {
          const auto s = gen::subspace<S>(rng, n);
          const auto p = orthocomplement_sub(H, s);
          c.check(sum(s, p).dim() == n && intersection_dim(s, p) == 0, [&] {
            return std::string(scalar_traits<S>::name) + "^" + std::to_string(n) + " gram " + to_string(H.gram()) +
                   ": span " + to_string(s.basis()) + " does not split";
          });
        }
      }
    }
  };
  run(Rational(0));
  run(GaussianRational(0));
  return detail::finish("criterion.5.exact_orthomodularity", c,
                        std::to_string(spaces) + " spaces over Q and Q(i) with dim<=5, " +
                            std::to_string(pins::orthomodular_subspaces) + " random subspaces each",
                        t, pins::orthomodular_budget_s, r);
}

// 6. ⟨φu, v⟩ = ⟨u, φ*v⟩, and the orthogonality biconditional, on random
// pairs of which half are made orthogonal on the adjoint side.
inline CheckResult linear_adjoint_bridge(Report& r) {
  using G = GaussianRational;
  detail::Timer t;
  detail::Count c;
  std::mt19937_64 rng(pins::seed + 6);
  std::size_t orthogonal = 0;
  for (std::size_t k = 0; k < pins::bridge_matrices; ++k) {
    const std::size_t m = 1 + rng() % pins::bridge_max_dim, n = 1 + rng() % pins::bridge_max_dim;
    const auto H1 = k % 2 ? HermitianSpace<G>(gen::positive_gram<G>(rng, m)) : HermitianSpace<G>::standard(m);
    const auto H2 = k % 3 ? HermitianSpace<G>(gen::positive_gram<G>(rng, n)) : HermitianSpace<G>::standard(n);
    const LinearMap<G> phi(H1, H2, gen::matrix<G>(rng, n, m));
    const auto adj = linear_adjoint(phi);
    for (std::size_t p = 0; p < pins::bridge_pairs; ++p) {
      auto u = gen::vector<G>(rng, m);
      const auto v = gen::vector<G>(rng, n);
      const auto w = adj(v);
      const G ww = inner(H1, w, w);
      if (p % 2 && !is_zero(ww)) {
        const G a = inner(H1, u, w) / ww;
        for (std::size_t i = 0; i < m; ++i) u[i] -= G(a * w[i]);
      }
      const G lhs = inner(H2, phi(u), v), rhs = inner(H1, u, w);
      orthogonal += is_zero(rhs);
      c.check(lhs == rhs && is_zero(lhs) == is_zero(rhs), [&] {
        return "phi=" + to_string(phi.matrix()) + " u=" + to_string(u) + " v=" + to_string(v);
      });
    }
  }
  return detail::finish("criterion.6.linear_adjoint_bridge", c,
                        std::to_string(pins::bridge_matrices) + " maps over Q(i)^n, n<=4, " +
                            std::to_string(orthogonal) + " orthogonal pairs",
                        t, 0, r);
}

// 7. ∇ ∘ (f ⊕ g) ∘ Δ is the matrix sum, and the semiadditive laws hold.
inline CheckResult semiadditive_agreement(Report& r) {
  using G = GaussianRational;
  detail::Timer t;
  detail::Count c;
  const auto C = dagger::standard_hermitian_instance<G>({0, 1, 2, 4});
  const dagger::Harness<dagger::HermitianTheory<G>> h(C);
  // objects 1 and 2 have dimensions 1 and 2; their squares are 2 and 4.
  std::map<std::size_t, dagger::BiproductWitness<dagger::HermitianTheory<G>>> self;
  for (const auto& w : h.verified_witnesses())
    if (w.left == w.right && !self.count(w.left) && C.obj(w.left).dim() > 0) self.emplace(w.left, w);
  std::mt19937_64 rng(pins::seed + 7);
  if (!self.count(1) || !self.count(2)) {
    c.check(false, [] { return "no verified witness for X⊕X"; });
  } else {
    for (std::size_t k = 0; k < pins::semiadditive_pairs; ++k) {
      const std::size_t a = 1 + rng() % 2, b = 1 + rng() % 2;
      const auto f = gen::matrix<G>(rng, C.obj(b).dim(), C.obj(a).dim());
      const auto g = gen::matrix<G>(rng, C.obj(b).dim(), C.obj(a).dim());
      c.check(h.sum(self.at(a), self.at(b), f, g) == f + g,
              [&] { return "f=" + to_string(f) + " g=" + to_string(g); });
    }
  }
  const auto laws = h.semiadditive();
  for (const auto& l : laws.checks)
    c.check(!is_failure(l.status), [&] { return l.name + ": " + l.witness; });
  return detail::finish("criterion.7.semiadditive_agreement", c,
                        std::to_string(pins::semiadditive_pairs) + " random pairs over Q(i)^1, Q(i)^2 and " +
                            std::to_string(laws.checks.size()) + " semiadditive laws",
                        t, 0, r);
}

// 8. i·id is a strict square root of -id over Q(i)²; over Q² no V with
// V² = -I commutes with the coordinate projector.
inline CheckResult strict_square_root_dichotomy(Report& r) {
  using G = GaussianRational;
  using Q = Rational;
  detail::Timer t;
  detail::Count c;
  const auto H = HermitianSpace<G>::standard(2);
  const G i = G::i(), h = G(Q(1, 2));
  std::vector<LinearMap<G>> family;
  for (const auto& m : {Matrix<G>(2, 2), Matrix<G>::identity(2), Matrix<G>{{G(1), G(0)}, {G(0), G(0)}},
                        Matrix<G>{{G(0), G(0)}, {G(0), G(1)}}, h * Matrix<G>{{G(1), G(1)}, {G(1), G(1)}},
                        h * Matrix<G>{{G(1), G(-1)}, {G(-1), G(1)}}, h * Matrix<G>{{G(1), -i}, {i, G(1)}},
                        h * Matrix<G>{{G(1), i}, {-i, G(1)}}})
    family.emplace_back(H, H, m);
  const LinearMap<G> U(H, H, G(-1) * Matrix<G>::identity(2)), V(H, H, i * Matrix<G>::identity(2));
  const auto gauss = strict_square_root_check(U, V, family);
  c.check(gauss.passed, [&] { return "Q(i)^2: i*id rejected: " + gauss.witness; });

  // V = [[a, b], [c, -a]] with a² + bc = -1; b = 0 would need a² = -1.
  const auto Hq = HermitianSpace<Q>::standard(2);
  const LinearMap<Q> Uq(Hq, Hq, Q(-1) * Matrix<Q>::identity(2));
  const std::vector<LinearMap<Q>> coordinate{LinearMap<Q>(Hq, Hq, Matrix<Q>{{Q(1), Q(0)}, {Q(0), Q(0)}})};
  std::set<Q> grid;
  for (int p = -pins::root_grid; p <= pins::root_grid; ++p)
    for (int q = 1; q <= pins::root_grid; ++q) {
      Q x(p, q);
      x.canonicalize();
      grid.insert(x);
    }
  std::size_t roots = 0, unitary = 0;
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (b == 0) continue;
      const Q cc = -(1 + a * a) / b;
      const LinearMap<Q> Vq(Hq, Hq, Matrix<Q>{{a, b}, {cc, -a}});
      ++roots;
      const auto p = is_unitary(Vq) ? (++unitary, strict_square_root_check(Uq, Vq, coordinate))
                                    : commutation_profile(Uq, Vq, coordinate);
      c.check(p.squares_to_u && !p.passed, [&] { return "Q^2: V=" + to_string(Vq.matrix()) + " is strict"; });
    }
  return detail::finish("criterion.8.strict_square_root_dichotomy", c,
                        "Q(i)^2 against " + std::to_string(family.size()) + " projections; " + std::to_string(roots) +
                            " rational roots of -I (" + std::to_string(unitary) + " unitary) against the coordinate projector",
                        t, 0, r);
}

// 9. The shipped orthoset instance: laws, zero object, supplied biproduct
// witnesses, H2 and the derived lemmas, with no violations.
inline CheckResult hypothesis_harness(Report& r, const dagger::OrthosetInstance& C) {
  detail::Timer t;
  detail::Count c;
  const dagger::Harness<dagger::OrthosetTheory> h(C);
  Report parts;
  parts.append(h.category_laws());
  parts.append(h.zero_object());
  parts.append(h.supplied_biproducts());
  const auto hyps = h.hypotheses();
  for (const auto& x : hyps.checks)
    if (x.name == "H2") parts.checks.push_back(x);
  parts.append(h.derived_lemmas(&hyps));
  std::string failing;
  for (const auto& x : parts.checks) {
    c.check(!is_failure(x.status), [&] { return x.name + ": " + (x.witness.empty() ? x.detail : x.witness); });
    if (is_failure(x.status)) failing += (failing.empty() ? "" : ", ") + x.name;
  }
  return detail::finish("criterion.9.hypothesis_harness", c,
                        std::to_string(C.size()) + " objects" + (failing.empty() ? "" : "; failing: " + failing), t,
                        pins::harness_budget_s, r);
}

// 10. Faithful line samples of Q(i)² and Q³ are Dacey and atomistic with
// rank equal to the dimension.
inline CheckResult sample_bridge(Report& r) {
  detail::Timer t;
  detail::Count c;
  std::mt19937_64 rng(pins::seed + 10);
  std::size_t faithful = 0, drawn = 0;
  const auto run = [&]<class S>(const HermitianSpace<S>& H) {
    for (std::size_t k = 0; k < pins::sample_draws; ++k) {
      const auto s = orthoset_sample(H, gen::line_sample(rng, H));
      ++drawn;
      if (!s.closure_faithful) continue;
      ++faithful;
      const auto d = dacey_check(s.orthoset);
      const auto rk = rank(s.orthoset);
      c.check(d.consistent() && d.value() && is_atomistic(s.orthoset) && rk.value == H.dim(), [&] {
        return std::string(scalar_traits<S>::name) + "^" + std::to_string(H.dim()) + " sample of " +
               std::to_string(s.lines.size()) + " lines: dacey=" + (d.value() ? "true" : "false") +
               " rank=" + std::to_string(rk.value);
      });
    }
  };
  run(HermitianSpace<GaussianRational>::standard(2));
  run(HermitianSpace<Rational>::standard(3));
  run(HermitianSpace<Rational>(gen::positive_gram<Rational>(rng, 3)));
  c.check(faithful > 0, [] { return "no closure-faithful sample was drawn"; });
  return detail::finish("criterion.10.sample_bridge", c,
                        std::to_string(faithful) + " faithful of " + std::to_string(drawn) + " samples", t, 0, r);
}

inline constexpr std::size_t criterion_count = 10;

// Runs the listed criteria (1-based; empty means all) into one report.
inline Report run(const std::vector<std::size_t>& which = {}) {
  std::set<std::size_t> want(which.begin(), which.end());
  const auto on = [&](std::size_t k) { return want.empty() || want.count(k) > 0; };
  Report r;
  if (on(1)) dacey_equivalence(r);
  if (on(2) || on(3)) {
    Report tmp;
    adjoint_synthesis(tmp);
    for (const auto& x : tmp.checks)
      if ((x.name.starts_with("criterion.2.") && on(2)) || (x.name.starts_with("criterion.3.") && on(3)))
        r.checks.push_back(x);
    for (const auto& [k, v] : tmp.timing_ms) r.timing_ms[k] = v;
  }
  if (on(4)) projection_equivalence(r);
  if (on(5)) exact_orthomodularity(r);
  if (on(6)) linear_adjoint_bridge(r);
  if (on(7)) semiadditive_agreement(r);
  if (on(8)) strict_square_root_dichotomy(r);
  if (on(9)) hypothesis_harness(r, dagger::standard_orthoset_instance());
  if (on(10)) sample_bridge(r);
  return r;
}

}  // namespace orthokit::acceptance
