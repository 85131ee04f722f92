#include <gtest/gtest.h>

#include <random>

#include "orthokit/core/dacey.hpp"
#include "orthokit/maps/ortho_map.hpp"
#include "orthokit/suite/oracles.hpp"

using namespace orthokit;

namespace {

FiniteOrthoset redundant4() { return FiniteOrthoset(4, {{1, 3}, {2, 3}}); }

OrthoMap inclusion01() { return OrthoMap(trivial_orthoset(1), mo2(), {0, 1}); }
OrthoMap sasaki01() { return OrthoMap(mo2(), trivial_orthoset(1), {0, 1, 0, 1, 1}); }

std::vector<FiniteOrthoset> labelled_upto(std::size_t n) {
  std::vector<FiniteOrthoset> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& X : oracle::all_labelled(k)) out.push_back(X);
  return out;
}

}  // namespace

TEST(Maps, AdjointPairExamples) {
  const auto X = mo2();
  EXPECT_TRUE(is_adjoint_pair(identity_map(X), identity_map(X)));
  // ι: {0,1} → MO2 written as a map into MO2 with domain the singleton {0,1}.
  EXPECT_TRUE(is_adjoint_pair(inclusion01(), sasaki01()));
  EXPECT_FALSE(is_adjoint_pair(inclusion01(), OrthoMap(X, trivial_orthoset(1), {0, 1, 0, 0, 1})));
  EXPECT_THROW(is_adjoint_pair(inclusion01(), inclusion01()), invalid_input);
}

TEST(Maps, SynthesisExamples) {
  const auto p = adjoint_pair(inclusion01());
  EXPECT_EQ(p.g, sasaki01());

  const OrthoMap const1(mo2(), trivial_orthoset(1), {0, 1, 1, 1, 1});
  const auto r = synthesize_adjoint(const1);
  ASSERT_TRUE(std::holds_alternative<NotAdjointable>(r));
  EXPECT_EQ(std::get<NotAdjointable>(r).y, 1U);
  EXPECT_EQ(std::get<NotAdjointable>(r).S, (Subset{0}));

  const auto red = adjoint_pair(identity_map(redundant4()));
  EXPECT_TRUE(maps_equivalent(red.g, identity_map(redundant4())));
  // 1 ∥ 2, so the least-index realizer of S_2 is 1.
  EXPECT_EQ(red.g.table(), (std::vector<std::size_t>{0, 1, 1, 3}));
  EXPECT_TRUE(is_adjoint_pair(identity_map(redundant4()), OrthoMap(redundant4(), redundant4(), {0, 2, 1, 3})));
}

TEST(Maps, SynthesisAgreesWithExhaustiveSearchUpToFour) {
  const auto objs = labelled_upto(4);
  std::size_t adjointable = 0, total = 0;
  for (const auto& X : objs)
    for (const auto& Y : objs)
      oracle::for_each_table(X.size(), Y.size(), [&](const std::vector<std::size_t>& t) {
        const OrthoMap f(X, Y, t);
        const auto r = synthesize_adjoint(f);
        const std::size_t count = oracle::count_adjoints_exhaustive(X, Y, t);
        ++total;
        ASSERT_EQ(std::holds_alternative<AdjointPair>(r), count > 0);
        if (auto* p = std::get_if<AdjointPair>(&r)) {
          ++adjointable;
          ASSERT_TRUE(is_adjoint_pair(p->f, p->g));
          ASSERT_EQ(kernel(p->f), ortho_complement(X, image(p->g)));
          ASSERT_EQ(kernel(p->g), ortho_complement(Y, image(p->f)));
          const auto bf = oracle::brute_force_adjoint(X, Y, t);
          ASSERT_TRUE(bf.has_value());
          ASSERT_TRUE(maps_equivalent(p->g, OrthoMap(Y, X, *bf)));
          if (is_irredundant(X)) ASSERT_EQ(count, 1U);
        }
      });
  EXPECT_GT(adjointable, 100U);
  EXPECT_GT(total, adjointable);
}

TEST(Maps, Equivalence) {
  const auto X = redundant4();
  EXPECT_TRUE(maps_equivalent(identity_map(X), identity_map(X)));
  EXPECT_TRUE(maps_equivalent(identity_map(X), OrthoMap(X, X, {0, 2, 1, 3})));
  EXPECT_FALSE(maps_equivalent(identity_map(mo2()), OrthoMap(mo2(), mo2(), {0, 3, 2, 1, 4})));
}

TEST(Maps, QuotientMaps) {
  EXPECT_EQ(quotient_map(sasaki01()), sasaki01());
  const auto X = redundant4();
  const auto q = irredundant_quotient(X).orthoset;
  EXPECT_EQ(quotient_map(OrthoMap(X, X, {0, 2, 1, 3})), identity_map(q));
  EXPECT_EQ(quotient_map(identity_map(X)), identity_map(q));
  const OrthoMap const1(mo2(), trivial_orthoset(1), {0, 1, 1, 1, 1});
  EXPECT_THROW(quotient_map(const1), precondition_failed);
}

TEST(Maps, QuotientFunctorialityAndLabels) {
  std::mt19937_64 rng(5);
  const auto objs = labelled_upto(4);
  std::size_t checked = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto& X = objs[rng() % objs.size()];
    const auto& Y = objs[rng() % objs.size()];
    const auto& Z = objs[rng() % objs.size()];
    std::vector<std::size_t> t1(X.size()), t2(Y.size());
    for (auto& v : t1) v = rng() % Y.size();
    for (auto& v : t2) v = rng() % Z.size();
    t1[0] = 0;
    t2[0] = 0;
    const OrthoMap f(X, Y, t1), h(Y, Z, t2);
    if (!is_adjointable(f) || !is_adjointable(h)) continue;
    const auto hf = compose(h, f);
    const auto pf = adjoint_pair(f), ph = adjoint_pair(h);
    ASSERT_TRUE(is_adjoint_pair(hf, compose(pf.g, ph.g)));
    ASSERT_EQ(quotient_map(hf), compose(quotient_map(h), quotient_map(f)));
    const auto lf = classify(pf);
    const auto lq = classify(adjoint_pair(quotient_map(f)));
    if (lf.partial_orthometry) ASSERT_TRUE(lq.partial_orthometry);
    if (lf.orthometry) ASSERT_TRUE(lq.orthometry);
    ++checked;
  }
  EXPECT_GT(checked, 200U);
}

TEST(Maps, KernelImageAndRestriction) {
  EXPECT_EQ(kernel(sasaki01()), (Subset{0, 2}));
  EXPECT_EQ(image(sasaki01()), (Subset{0, 1}));
  EXPECT_EQ(kernel(sasaki01()), ortho_complement(mo2(), image(inclusion01())));
  const auto z = zero_map(mo2(), trivial_orthoset(1));
  EXPECT_EQ(kernel(z), mo2().full());
  EXPECT_EQ(image(z), (Subset{0}));
  const auto X = mo2();
  EXPECT_EQ(kernel(identity_map(X)), (Subset{0}));
  EXPECT_EQ(image(identity_map(X)), X.full());
  const auto r = zero_kernel_restriction(adjoint_pair(identity_map(X)));
  EXPECT_EQ(r.pair.f, identity_map(X));

  const auto rs = zero_kernel_restriction(adjoint_pair(sasaki01()));
  EXPECT_EQ(rs.dom_embedding, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(is_adjoint_pair(rs.pair.f, rs.pair.g));
  EXPECT_TRUE(kernel(rs.pair.f) == Subset{0});
}

TEST(Maps, ClassifyExamples) {
  const auto p = adjoint_pair(inclusion01());
  const auto li = classify(p);
  EXPECT_TRUE(li.orthometry);
  EXPECT_TRUE(li.partial_orthometry);
  EXPECT_FALSE(li.orthoisomorphism);
  const auto ls = classify({p.g, p.f});
  ASSERT_TRUE(ls.sasaki_for.has_value());
  EXPECT_EQ(*ls.sasaki_for, (Subset{0, 1}));

  const auto proj = compose(p.f, p.g);
  EXPECT_EQ(proj.table(), (std::vector<std::size_t>{0, 1, 0, 1, 1}));
  const auto lp = classify(adjoint_pair(proj));
  ASSERT_TRUE(lp.projection_onto.has_value());
  EXPECT_EQ(*lp.projection_onto, (Subset{0, 1}));
  EXPECT_TRUE(lp.self_adjoint);
  EXPECT_TRUE(lp.partial_orthometry);

  const OrthoMap swap(mo2(), mo2(), {0, 2, 1, 4, 3});
  EXPECT_TRUE(is_adjoint_pair(swap, swap));
  const auto lw = classify({swap, swap});
  EXPECT_TRUE(lw.orthoisomorphism);
  EXPECT_TRUE(lw.partial_orthometry);
  EXPECT_TRUE(lw.orthometry);

  EXPECT_TRUE(classify(adjoint_pair(zero_map(mo2(), mo2()))).projection_onto.has_value());
  const OrthoMap rot(mo2(), mo2(), {0, 3, 4, 1, 2});
  EXPECT_EQ(classify(adjoint_pair(rot)).names().front(), "orthoisomorphism");
}

TEST(Maps, LabelChainsOnIrredundantObjects) {
  // Every adjointable endomorphism of every irredundant orthoset up to 5.
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& X : oracle::all_canonical(n)) {
      if (!is_irredundant(X)) continue;
      oracle::for_each_table(n, n, [&](const std::vector<std::size_t>& t) {
        const OrthoMap f(X, X, t);
        const auto r = synthesize_adjoint(f);
        if (!std::holds_alternative<AdjointPair>(r)) return;
        const auto& p = std::get<AdjointPair>(r);
        const auto l = classify(p);
        const bool direct_iso = is_bijective(f) && is_orthoembedding(f);
        ASSERT_EQ(l.orthoisomorphism, direct_iso);
        if (l.orthoisomorphism) ASSERT_TRUE(l.orthometry);
        if (l.orthometry) ASSERT_TRUE(l.partial_orthometry);
        if (l.projection_onto) ASSERT_TRUE(l.partial_orthometry && l.self_adjoint);
        if (l.orthometry) ASSERT_TRUE(is_orthoembedding(f));
      });
    }
}

TEST(Maps, ProjectionLabelMatchesSasakiConstruction) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& X : oracle::all_canonical(n)) {
      const auto constructive = oracle::projections_by_sasaki(X);
      oracle::for_each_table(n, n, [&](const std::vector<std::size_t>& t) {
        const OrthoMap f(X, X, t);
        bool labelled = false;
        if (auto p = synthesize_adjoint(f); std::holds_alternative<AdjointPair>(p))
          labelled = classify(std::get<AdjointPair>(p)).projection_onto.has_value();
        ASSERT_EQ(labelled, constructive.count(t) > 0) << "n=" << n;
      });
    }
}

TEST(Maps, InclusionsAdjointableImpliesDacey) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& X : oracle::all_canonical(n)) {
      bool all = true;
      for (Subset A : enumerate_orthoclosed(X)) {
        const auto sub = restrict_to(X, A);
        all = all && is_adjointable(OrthoMap(sub.orthoset, X, sub.embedding));
      }
      if (all) ASSERT_TRUE(dacey_check(X).value());
    }
}

TEST(Maps, LatticeAdjointLaws) {
  const auto p = adjoint_pair(sasaki01());
  EXPECT_TRUE(verify_lattice_adjoint_laws(p).holds);
  EXPECT_TRUE(verify_lattice_adjoint_laws(adjoint_pair(identity_map(mo2()))).holds);
  const auto z = adjoint_pair(zero_map(mo2(), mo2()));
  EXPECT_TRUE(verify_lattice_adjoint_laws(z).holds);
  for (Subset A : enumerate_orthoclosed(mo2())) EXPECT_EQ(closure(mo2(), z.f.apply(A)), (Subset{0}));

  const auto objs = labelled_upto(4);
  for (const auto& X : objs)
    for (const auto& Y : objs)
      oracle::for_each_table(X.size(), Y.size(), [&](const std::vector<std::size_t>& t) {
        if (auto r = synthesize_adjoint(OrthoMap(X, Y, t)); std::holds_alternative<AdjointPair>(r))
          ASSERT_TRUE(verify_lattice_adjoint_laws(std::get<AdjointPair>(r)).holds);
      });
}
