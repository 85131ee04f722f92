#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "orthokit/dagger/harness.hpp"
#include "orthokit/dagger/instances.hpp"
#include "orthokit/suite/generators.hpp"

using namespace orthokit;
using namespace orthokit::dagger;

namespace {

using Q = Rational;
using G = GaussianRational;
using OH = Harness<OrthosetTheory>;
using GH = Harness<HermitianTheory<G>>;

const OrthosetInstance& orthoset_instance() {
  static const auto C = standard_orthoset_instance();
  return C;
}

const HermitianInstance<G>& gauss012() {
  static const auto C = standard_hermitian_instance<G>({0, 1, 2});
  return C;
}

Status status_of(const Report& r, const std::string& name) {
  const auto* c = r.find(name);
  EXPECT_NE(c, nullptr) << name;
  return c ? c->status : Status::fail;
}

bool no_failures(const Report& r) {
  for (const auto& c : r.checks)
    if (is_failure(c.status)) {
      ADD_FAILURE() << c.name << ": " << c.detail << " | " << c.witness;
      return false;
    }
  return true;
}

Matrix<G> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) { return gen::matrix<G>(rng, r, c); }

}  // namespace

TEST(Dagger, OrthosetInstanceShape) {
  const auto& C = orthoset_instance();
  ASSERT_EQ(C.size(), 4U);
  // I₂ → X: every element is a valid image.
  EXPECT_EQ(C.hom(1, 2).size(), 5U);
  EXPECT_EQ(C.hom(1, 1).size(), 2U);
  EXPECT_EQ(C.hom(0, 2).size(), 1U);
  EXPECT_EQ(C.hom(2, 0).size(), 1U);
}

TEST(Dagger, CategoryLawsOnShippedInstances) {
  EXPECT_TRUE(no_failures(verify_category_laws(orthoset_instance())));
  EXPECT_TRUE(no_failures(verify_category_laws(gauss012())));

  OrthosetInstance single;
  single.add_object(zero_orthoset(), "0");
  single.add_morphism(0, 0, {0});
  const auto r = verify_category_laws(single);
  EXPECT_TRUE(r.passed());
}

TEST(Dagger, UnlistedCompositeBreaksClosure) {
  OrthosetInstance C;
  C.add_object(zero_orthoset(), "0");
  C.add_object(mo2(), "MO2");
  C.add_morphism(0, 0, {0});
  C.add_morphism(1, 1, {0, 1, 2, 3, 4});
  C.add_morphism(1, 1, {0, 2, 1, 3, 4});
  C.add_morphism(1, 1, {0, 1, 2, 4, 3});  // the composite of the two swaps is missing
  C.add_morphism(0, 1, {0});
  C.add_morphism(1, 0, {0, 0, 0, 0, 0});
  const auto r = verify_category_laws(C);
  EXPECT_EQ(status_of(r, "laws.closed_under_composition"), Status::fail);
  EXPECT_EQ(status_of(r, "laws.dagger_involutive"), Status::pass);
}

TEST(Dagger, ZeroObject) {
  const auto r = verify_zero_object(orthoset_instance());
  EXPECT_TRUE(no_failures(r));
  // The unique map out of 0 sends 0 to 0, and every map into 0 is constant.
  EXPECT_EQ(orthoset_instance().hom(0, 2).front(), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(no_failures(verify_zero_object(gauss012())));

  OrthosetInstance C;
  C.add_object(mo2(), "MO2");
  C.add_morphism(0, 0, {0, 1, 2, 3, 4});
  EXPECT_EQ(status_of(verify_zero_object(C), "zero.present"), Status::fail);
  EXPECT_EQ(status_of(check_hypotheses(C), "H1"), Status::not_witnessed);
}

TEST(Dagger, CrossTermWitnessFails) {
  const auto& C = orthoset_instance();
  const BiproductWitness<OrthosetTheory> w{1, 1, 2, {0, 1}, {0, 3}, "bad"};
  const auto r = verify_dagger_biproduct(C, w);
  EXPECT_EQ(status_of(r, "biproduct[bad].cross_term"), Status::fail);
  EXPECT_EQ(status_of(r, "biproduct[bad].dagger_mono_left"), Status::pass);
}

// With every adjointable map present, (id, id): I₂ ⊕ I₂ → I₂ has two
// mediators out of MO2, 1,2 ↦ 1 with 3 or 4 also sent to 1, and none out
// of the wedge, where S_1 = {0} is not a row.
TEST(Dagger, NoRankTwoOrthosetIsASplitOfSingletons) {
  const auto& C = orthoset_instance();
  const OH h(C);
  for (const auto& w : C.supplied_witnesses()) {
    const auto r = h.biproduct(w);
    EXPECT_EQ(status_of(r, "biproduct[" + w.label + "].cross_term"), Status::pass);
    EXPECT_EQ(status_of(r, "biproduct[" + w.label + "].universal_property"), Status::fail);
  }
  const auto mo2w = C.supplied_witnesses()[0];
  const auto m = h.mediate(mo2w, 1, {0, 1}, {0, 1});
  ASSERT_TRUE(m.h.has_value());
  EXPECT_FALSE(m.unique);
  std::size_t count = 0;
  for (const auto& f : C.hom(2, 1))
    if (f[1] == 1 && f[2] == 1) {
      ++count;
      EXPECT_TRUE((f == std::vector<std::size_t>{0, 1, 1, 1, 0}) || (f == std::vector<std::size_t>{0, 1, 1, 0, 1}));
    }
  EXPECT_EQ(count, 2U);

  const auto wedge = C.supplied_witnesses()[2];
  EXPECT_FALSE(h.mediate(wedge, 1, {0, 1}, {0, 1}).h.has_value());
  EXPECT_FALSE(is_adjointable(OrthoMap(C.obj(3), C.obj(1), {0, 1, 1})));
}

TEST(Dagger, OrthosetHypothesesAndLemmas) {
  const auto& C = orthoset_instance();
  const OH h(C);
  const auto hyps = h.hypotheses();
  EXPECT_EQ(status_of(hyps, "H1"), Status::not_witnessed);
  EXPECT_EQ(status_of(hyps, "H2"), Status::fail);
  EXPECT_EQ(status_of(hyps, "H3a"), Status::pass);
  EXPECT_EQ(status_of(hyps, "H3b"), Status::pass);
  EXPECT_EQ(status_of(hyps, "H3'"), Status::pass);

  const auto lemmas = h.derived_lemmas(&hyps);
  for (const auto& c : lemmas.checks) EXPECT_NE(c.status, Status::fail) << c.name << ": " << c.witness;
  EXPECT_EQ(status_of(lemmas, "lemma.sasaki_unique"), Status::pass);
  EXPECT_EQ(status_of(lemmas, "lemma.projection_unique"), Status::pass);
  EXPECT_EQ(status_of(lemmas, "lemma.partial_isometry"), Status::pass);
  EXPECT_EQ(status_of(lemmas, "lemma.dagger_iso_is_orthoiso"), Status::pass);
  EXPECT_EQ(status_of(lemmas, "lemma.dagger_mono_preserves_perp"), Status::pass);
}

TEST(Dagger, SasakiMapOntoFirstLineIsTheSynthesizedAdjoint) {
  const auto& C = orthoset_instance();
  const std::vector<std::size_t> iota{0, 1};
  std::vector<std::vector<std::size_t>> found;
  for (const auto& s : C.hom(2, 1))
    if (OrthosetTheory::is_adjoint(C.obj(1), C.obj(2), iota, s) && OrthosetTheory::compose(C.obj(1), C.obj(2), C.obj(1), s, iota) == iota)
      found.push_back(s);
  ASSERT_EQ(found.size(), 1U);
  EXPECT_EQ(found[0], adjoint_pair(OrthoMap(C.obj(1), C.obj(2), iota)).g.table());
  EXPECT_EQ(found[0], (std::vector<std::size_t>{0, 1, 0, 1, 1}));
}

// On MO2 endomorphisms, f f* f = f agrees with the partial-orthometry label
// and with factoring through dagger monos onto the supports.
TEST(Dagger, PartialIsometryClassesOnMo2) {
  const auto& C = orthoset_instance();
  const OH h(C);
  std::size_t positive = 0;
  for (const auto& f : C.hom(2, 2)) {
    const auto fs = h.dagger(2, 2, f);
    const bool a = h.compose(2, 2, 2, f, h.compose(2, 2, 2, fs, f)) == f;
    EXPECT_EQ(a, OrthosetTheory::partial_orthometry(C.obj(2), C.obj(2), f, fs)) << OrthosetTheory::describe(f);
    positive += a;
  }
  EXPECT_GT(positive, 0U);
  EXPECT_LT(positive, C.hom(2, 2).size());
}

TEST(Dagger, HermitianCoordinateWitness) {
  const auto& C = gauss012();
  const auto& w = C.supplied_witnesses()[0];
  EXPECT_TRUE(no_failures(verify_dagger_biproduct(C, w)));

  // f ⊕ g is the block-diagonal matrix.
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto f = random_matrix(rng, 1, 1);
    const auto g = random_matrix(rng, 1, 1);
    EXPECT_EQ(oplus_map(C, w, w, f, g), block_diagonal(f, g));
  }
  EXPECT_EQ(oplus_map(C, w, w, Matrix<G>::identity(1), Matrix<G>::identity(1)), Matrix<G>::identity(2));
}

TEST(Dagger, HermitianSemiadditiveSumIsMatrixSum) {
  auto C = standard_hermitian_instance<G>({0, 1, 2});
  // A second splitting of ℚ(i)² through the lines of (1,1) and (1,-1).
  const G w(Rational(1, 2), Rational(-1, 2));
  C.add_witness({1, 1, 2, w * Matrix<G>{{G(1)}, {G(1)}}, w * Matrix<G>{{G(1)}, {G(-1)}}, "diagonal"});
  const GH h(C);
  const auto& coord = C.supplied_witnesses()[0];
  const auto& diag = C.supplied_witnesses().back();
  ASSERT_TRUE(h.verified(diag));
  const BiproductWitness<HermitianTheory<G>> one{1, 0, 1, Matrix<G>::identity(1), Matrix<G>(1, 0), "1=1+0"};

  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto f = random_matrix(rng, 1, 1);
    const auto g = random_matrix(rng, 1, 1);
    const auto s = h.sum(coord, coord, f, g);
    EXPECT_EQ(s, f + g);
    EXPECT_EQ(h.sum(diag, coord, f, g), s);
    EXPECT_EQ(h.sum(coord, diag, f, g), s);
    EXPECT_EQ(h.sum(coord, coord, f, Matrix<G>(1, 1)), f);
  }
  EXPECT_TRUE(h.verified(one));
  EXPECT_TRUE(no_failures(h.semiadditive()));
}

TEST(Dagger, HermitianHypotheses) {
  const auto r = check_hypotheses(gauss012());
  EXPECT_EQ(status_of(r, "H2"), Status::pass);
  EXPECT_EQ(status_of(r, "H3a"), Status::pass);
  EXPECT_EQ(status_of(r, "H3b"), Status::pass);
  EXPECT_EQ(status_of(r, "H3'"), Status::pass);
  EXPECT_EQ(status_of(r, "H4"), Status::pass);
  const auto* h1 = r.find("H1");
  ASSERT_NE(h1, nullptr);
  EXPECT_EQ(h1->status, Status::not_witnessed);
  EXPECT_EQ(h1->witness, "Q(i)^1⊕Q(i)^2; Q(i)^2⊕Q(i)^2");

  // i has no square root in ℚ(i), so diag-free H5 fails on [[i]].
  EXPECT_EQ(status_of(r, "H5"), Status::fail);

  const auto z = check_hypotheses(standard_hermitian_instance<G>({0}));
  EXPECT_EQ(status_of(z, "H1"), Status::witnessed);
}

TEST(Dagger, HermitianDerivedLemmas) {
  const auto r = verify_derived_lemmas(gauss012());
  EXPECT_TRUE(no_failures(r));
  EXPECT_EQ(status_of(r, "lemma.sums_parallel"), Status::pass);
  EXPECT_EQ(status_of(r, "lemma.biproduct_of_singletons"), Status::pass);
  EXPECT_EQ(status_of(r, "lemma.partial_isometry"), Status::pass);
}

TEST(Dagger, HermitianOplusLaws) {
  const auto r = verify_oplus_laws(gauss012());
  EXPECT_TRUE(no_failures(r));
  EXPECT_EQ(status_of(r, "oplus.coprojection"), Status::pass);
}

TEST(Dagger, RationalInstanceAlsoSatisfiesTheLaws) {
  const auto C = standard_hermitian_instance<Q>({0, 1, 2});
  const Harness<HermitianTheory<Q>> h(C);
  EXPECT_TRUE(no_failures(h.category_laws()));
  EXPECT_TRUE(no_failures(h.oplus_laws()));
  EXPECT_TRUE(no_failures(h.semiadditive()));
}

TEST(Dagger, RedundantObjectsStillGiveAnInvolutiveDagger) {
  const auto C = adjointable_instance({{zero_orthoset(), "0"}, {FiniteOrthoset(4, {{1, 3}, {2, 3}}), "R"}});
  EXPECT_EQ(status_of(verify_category_laws(C), "laws.dagger_involutive"), Status::pass);
}

TEST(Dagger, ReportCarriesTimingApartFromChecks) {
  const auto r = check_instance(orthoset_instance(), true, true);
  EXPECT_FALSE(r.timing_ms.empty());
  EXPECT_FALSE(r.passed());
  const std::regex duration(R"([0-9.]+ ?ms\b)");
  for (const auto& c : r.checks) EXPECT_FALSE(std::regex_search(c.detail, duration)) << c.name << ": " << c.detail;
}
