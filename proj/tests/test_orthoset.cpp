#include <gtest/gtest.h>

#include <random>

#include "orthokit/core/dacey.hpp"
#include "orthokit/core/orthoset.hpp"
#include "orthokit/core/rank.hpp"
#include "orthokit/suite/oracles.hpp"

using namespace orthokit;

namespace {

FiniteOrthoset redundant4() { return FiniteOrthoset(4, {{1, 3}, {2, 3}}); }
FiniteOrthoset path4() { return FiniteOrthoset(4, {{1, 2}, {2, 3}}); }
FiniteOrthoset path5() { return FiniteOrthoset(5, {{1, 2}, {2, 3}, {3, 4}}); }
FiniteOrthoset bar() { return FiniteOrthoset(3, {{1, 2}}); }

std::vector<FiniteOrthoset> small_corpus(std::size_t max_n) {
  std::vector<FiniteOrthoset> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& X : oracle::all_canonical(n)) out.push_back(X);
  return out;
}

}  // namespace

TEST(Orthoset, ValidationCompletesFalsityRowAndSymmetrizes) {
  const FiniteOrthoset X(5, {{2, 1}, {3, 4}});
  EXPECT_EQ(X, mo2());
  for (std::size_t x = 0; x < 5; ++x) EXPECT_TRUE(X.perp(0, x));
  EXPECT_TRUE(X.perp(1, 2));
  EXPECT_FALSE(X.perp(1, 1));
  EXPECT_EQ(zero_orthoset().size(), 1U);
}

TEST(Orthoset, RejectsBadInput) {
  EXPECT_THROW(FiniteOrthoset(3, {{1, 1}}), invalid_input);
  EXPECT_THROW(FiniteOrthoset(0, {}), invalid_input);
  EXPECT_THROW(FiniteOrthoset(3, {{1, 3}}), invalid_input);
  EXPECT_THROW(FiniteOrthoset(65, {}), invalid_input);
}

TEST(Orthoset, ComplementAndClosureOnMO2) {
  const auto X = mo2();
  EXPECT_EQ(ortho_complement(X, {1}), (Subset{0, 2}));
  EXPECT_EQ(ortho_complement(X, Subset{}), X.full());
  EXPECT_EQ(ortho_complement(X, {0}), X.full());
  EXPECT_EQ(closure(X, {1}), (Subset{0, 1}));
  EXPECT_EQ(closure(X, {1, 3}), X.full());
  EXPECT_EQ(closure(X, X.full()), X.full());
}

TEST(Orthoset, ClosureOperatorLawsExhaustive) {
  for (const auto& X : small_corpus(6)) {
    const std::size_t n = X.size();
    for (Subset::mask_type a = 0; a < (1ULL << n); ++a) {
      const Subset A(a);
      ASSERT_TRUE(A.subset_of(closure(X, A)));
      ASSERT_EQ(ortho_complement(X, A), ortho_complement(X, closure(X, A)));
      ASSERT_EQ(closure(X, closure(X, A)), closure(X, A));
      for (Subset::mask_type b = a;; b = (b + 1) | a) {
        // b ranges over supersets of a
        ASSERT_TRUE(ortho_complement(X, Subset(b)).subset_of(ortho_complement(X, A)));
        if (b == (1ULL << n) - 1) break;
      }
    }
  }
}

TEST(Orthoset, EnumerationExamples) {
  const auto cx = enumerate_orthoclosed(mo2());
  const std::vector<Subset> expected{{0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, mo2().full()};
  std::vector<Subset> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(cx, sorted);
  EXPECT_EQ(enumerate_orthoclosed(zero_orthoset()), (std::vector<Subset>{{0}}));
  EXPECT_EQ(enumerate_orthoclosed(trivial_orthoset(1)), (std::vector<Subset>{{0}, {0, 1}}));
}

TEST(Orthoset, EnumerationMatchesPowersetScan) {
  for (const auto& X : small_corpus(6)) {
    const auto cx = enumerate_orthoclosed(X);
    ASSERT_EQ(cx, oracle::orthoclosed_by_powerset(X));
    for (Subset A : cx) ASSERT_TRUE(A.contains(0));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto X = oracle::random_orthoset(rng, 7 + i % 4, 0.2 + 0.1 * (i % 6));
    ASSERT_EQ(enumerate_orthoclosed(X), oracle::orthoclosed_by_powerset(X));
  }
}

TEST(Orthoset, EnumerationBounds) {
  EXPECT_THROW(enumerate_orthoclosed(trivial_orthoset(30)), bound_exceeded);
  // 12 pairwise orthogonal elements give a Boolean lattice with 4096 elements.
  std::vector<FiniteOrthoset::Edge> edges = oracle::proper_pairs(14);
  const FiniteOrthoset boolean13(14, edges);
  EXPECT_THROW(enumerate_orthoclosed(boolean13), bound_exceeded);
  try {
    enumerate_orthoclosed(boolean13);
  } catch (const bound_exceeded& e) {
    EXPECT_EQ(e.bound(), "max-lattice");
  }
  EXPECT_EQ(enumerate_orthoclosed(boolean13, {24, 1 << 13}).size(), 1U << 13);
}

TEST(Orthoset, SeparationAxioms) {
  EXPECT_TRUE(is_irredundant(mo2()));
  EXPECT_TRUE(is_atomistic(mo2()));
  EXPECT_FALSE(is_irredundant(redundant4()));
  EXPECT_TRUE(is_irredundant(zero_orthoset()));
  EXPECT_TRUE(is_atomistic(zero_orthoset()));
  // {1}⊥ = {0,2} is strictly inside {3}⊥ = {0,2,4}
  EXPECT_FALSE(is_atomistic(path5()));
}

TEST(Orthoset, IrredundantQuotient) {
  const auto q = irredundant_quotient(redundant4());
  EXPECT_EQ(q.orthoset.size(), 3U);
  EXPECT_EQ(q.classes(), (std::vector<Subset>{{0}, {1, 2}, {3}}));
  EXPECT_EQ(irredundant_quotient(mo2()).orthoset, mo2());
  EXPECT_EQ(irredundant_quotient(trivial_orthoset(2)).orthoset, trivial_orthoset(1));
}

TEST(Orthoset, QuotientSoundness) {
  for (const auto& X : small_corpus(6)) {
    const auto q = irredundant_quotient(X);
    ASSERT_TRUE(is_irredundant(q.orthoset));
    ASSERT_EQ(rank(q.orthoset).value, rank(X).value);
    // Preimage of a closed set of P(X) is closed in X; this is an order
    // isomorphism C(P(X)) -> C(X) commuting with complement.
    const auto cq = enumerate_orthoclosed(q.orthoset);
    const auto cx = enumerate_orthoclosed(X);
    ASSERT_EQ(cq.size(), cx.size());
    auto lift = [&](Subset s) {
      Subset out;
      for (std::size_t x = 0; x < X.size(); ++x)
        if (s.contains(q.class_of[x])) out.insert(x);
      return out;
    };
    for (Subset A : cq) {
      ASSERT_TRUE(std::binary_search(cx.begin(), cx.end(), lift(A)));
      ASSERT_EQ(lift(ortho_complement(q.orthoset, A)), ortho_complement(X, lift(A)));
      for (Subset B : cq) ASSERT_EQ(A.subset_of(B), lift(A).subset_of(lift(B)));
    }
  }
}

TEST(Dacey, Examples) {
  const auto mo = dacey_check(mo2());
  EXPECT_TRUE(mo.consistent());
  EXPECT_TRUE(mo.value());
  EXPECT_TRUE(dacey_check(zero_orthoset()).value());

  // P4 on the proper elements: C(X) is the hexagon, not orthomodular.
  const auto hex = dacey_check(path5());
  EXPECT_TRUE(hex.consistent());
  EXPECT_FALSE(hex.value());
  EXPECT_FALSE(hex.at(DaceyCriterion::e).witness.empty());

  // The three-element path has C(X) = {0, {0,2}, {0,1,3}, X}, which is Boolean.
  EXPECT_EQ(enumerate_orthoclosed(path4()).size(), 4U);
  EXPECT_TRUE(dacey_check(path4()).value());
}

TEST(Dacey, CriterionCAgreesWithLiteralSubsetScan) {
  // (c) evaluated literally over every subset B of every subspace A.
  for (const auto& X : small_corpus(6)) {
    bool literal = true;
    for (Subset A : enumerate_orthoclosed(X)) {
      for (Subset::mask_type b = 0; b < (1ULL << X.size()); ++b) {
        const Subset B(b);
        if (!B.subset_of(A)) continue;
        const Subset rel = ortho_complement(X, ortho_complement(X, B) & A) & A;
        if (rel != closure(X, B)) literal = false;
      }
    }
    ASSERT_EQ(literal, dacey_check(X, {DaceyCriterion::c}).value());
  }
}

TEST(Dacey, CriteriaAgreeOnAllCanonicalUpToSeven) {
  std::size_t dacey = 0, total = 0;
  for (const auto& X : small_corpus(7)) {
    const auto r = dacey_check(X);
    ASSERT_TRUE(r.consistent()) << "edges " << X.edges().size();
    dacey += r.value();
    ++total;
  }
  EXPECT_GT(dacey, 0U);
  EXPECT_LT(dacey, total);
}

TEST(Dacey, CriteriaAgreeOnRandomOrthosets) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const auto X = oracle::random_orthoset(rng, 2 + i % 11, 0.15 + 0.05 * (i % 14));
    ASSERT_TRUE(dacey_check(X).consistent());
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(mo2()).value, 2U);
  EXPECT_EQ(rank(mo2()).method, RankMethod::greedy);
  EXPECT_EQ(rank(trivial_orthoset(1)).value, 1U);
  EXPECT_EQ(rank(zero_orthoset()).value, 0U);
  EXPECT_EQ(rank(path5()).method, RankMethod::exact_clique);
  EXPECT_EQ(rank(path5()).value, 2U);
  EXPECT_EQ(maximal_perp_set(mo2(), mo2().full()), (Subset{1, 2}));
  EXPECT_EQ(maximal_perp_set(mo2(), {0, 3, 4}), (Subset{3, 4}));
}

TEST(Rank, GreedyMatchesExactWhereItApplies) {
  std::size_t applied = 0;
  for (const auto& X : small_corpus(7)) {
    ASSERT_EQ(rank(X).value, maximum_perp_set(X).size());
    if (greedy_rank_applies(X)) {
      ++applied;
      ASSERT_EQ(maximal_perp_set(X, X.full()).size(), maximum_perp_set(X).size());
    }
  }
  EXPECT_GT(applied, 10U);
}

TEST(Orthoset, UnitalAndSingleton) {
  EXPECT_TRUE(is_unital(trivial_orthoset(1)));
  EXPECT_TRUE(is_singleton(trivial_orthoset(1)));
  EXPECT_FALSE(is_unital(mo2()));
  EXPECT_FALSE(is_singleton(mo2()));
  const FiniteOrthoset X(4, {{1, 2}});
  EXPECT_TRUE(is_unital(X));
  EXPECT_FALSE(is_singleton(X));
  EXPECT_EQ(rank(X).value, 2U);
}

TEST(Orthoset, Decompositions) {
  const auto X = mo2();
  EXPECT_TRUE(is_decomposition(X, {{0, 1}, {0, 2}}));
  EXPECT_FALSE(is_decomposition(X, {{0, 1}, {0, 3}}));
  EXPECT_TRUE(is_decomposition(X, {X.full()}));
  const auto d = split_by_rank(X, 1, 1);
  EXPECT_EQ(d.parts, (std::vector<Subset>{{0, 1}, {0, 2}}));
  EXPECT_THROW(split_by_rank(X, 2, 1), precondition_failed);
  EXPECT_THROW(split_by_rank(path5(), 1, 1), precondition_failed);
}

TEST(Orthoset, RankAdditivityOverDecompositions) {
  std::size_t checked = 0;
  for (const auto& X : small_corpus(7)) {
    if (!greedy_rank_applies(X)) continue;
    const auto cx = enumerate_orthoclosed(X);
    for (Subset A : cx) {
      const Subset B = ortho_complement(X, A);
      ASSERT_TRUE(is_decomposition(X, {A, B}));
      const std::size_t ra = rank(restrict_to(X, A).orthoset).value;
      const std::size_t rb = rank(restrict_to(X, B).orthoset).value;
      ASSERT_EQ(ra + rb, rank(X).value);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100U);
}

TEST(Orthoset, Reducibility) {
  EXPECT_FALSE(is_reducible(mo2()));
  EXPECT_TRUE(is_reducible(bar()));
  EXPECT_FALSE(is_reducible(zero_orthoset()));
}

TEST(Orthoset, WedgeSum) {
  const auto w = wedge_sum(trivial_orthoset(1), trivial_orthoset(1));
  EXPECT_EQ(w.orthoset, bar());
  EXPECT_EQ(rank(w.orthoset).value, 2U);
  EXPECT_TRUE(is_reducible(w.orthoset));
  EXPECT_EQ(wedge_sum(mo2(), zero_orthoset()).orthoset, mo2());
  const auto m = wedge_sum(mo2(), trivial_orthoset(1));
  EXPECT_EQ(m.orthoset.size(), 6U);
  EXPECT_EQ(rank(m.orthoset).value, 3U);
  EXPECT_EQ(m.right, (std::vector<std::size_t>{0, 5}));
}
