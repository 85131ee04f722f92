#include <gtest/gtest.h>

#include <random>

#include "orthokit/core/dacey.hpp"
#include "orthokit/core/rank.hpp"
#include "orthokit/hermitian/checks.hpp"
#include "orthokit/hermitian/lines.hpp"
#include "orthokit/hermitian/space.hpp"
#include "orthokit/suite/generators.hpp"

using namespace orthokit;

using Q = Rational;
using G = GaussianRational;

namespace {

const G I = G::i();
G gq(int re, int im) { return {Q(re), Q(im)}; }
Q q(int n, int d = 1) {
  Q x(n, d);
  x.canonicalize();
  return x;
}

template <class S>
Matrix<S> diag2(S a, S b) {
  return Matrix<S>{{a, S(0)}, {S(0), b}};
}

}  // namespace

TEST(Scalar, GaussianArithmeticAndInvolution) {
  const G a = gq(1, 2), b = gq(3, -1);
  EXPECT_EQ(a * b, gq(5, 5));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(conj(a * b), conj(b) * conj(a));
  EXPECT_EQ(conj(conj(a)), a);
  EXPECT_EQ(I * I, G(-1));
  EXPECT_EQ(norm(a), q(5));
  EXPECT_THROW(a / G(0), std::domain_error);
}

TEST(Scalar, ParseAndFormat) {
  using T = scalar_traits<G>;
  EXPECT_EQ(T::parse("1/2+3/4 i"), G(q(1, 2), q(3, 4)));
  EXPECT_EQ(T::parse("1/2-3/4 i"), G(q(1, 2), q(-3, 4)));
  EXPECT_EQ(T::parse("i"), I);
  EXPECT_EQ(T::parse("-i"), -I);
  EXPECT_EQ(T::parse("2i"), gq(0, 2));
  EXPECT_EQ(T::parse("1+i"), gq(1, 1));
  EXPECT_EQ(T::parse("-3"), G(-3));
  EXPECT_EQ(T::parse("4/6"), G(q(2, 3)));
  EXPECT_THROW(T::parse("1/0"), invalid_input);
  EXPECT_THROW(T::parse("abc"), invalid_input);
  EXPECT_THROW(T::parse(""), invalid_input);
  EXPECT_THROW(scalar_traits<Q>::parse("i"), invalid_input);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    const G z = gen::scalar<G>(rng, 9);
    EXPECT_EQ(T::parse(T::format(z)), z) << T::format(z);
  }
  EXPECT_EQ(T::format(G(q(1, 2), q(-3, 4))), "1/2-3/4 i");
  EXPECT_EQ(T::format(gq(1, 1)), "1+i");
}

TEST(Hermitian, InnerProductExamples) {
  const auto H = HermitianSpace<G>::standard(2);
  EXPECT_EQ(inner(H, {G(1), I}, {G(1), -I}), G(0));
  EXPECT_EQ(inner(H, {G(0), G(0)}, {G(0), G(0)}), G(0));
  const HermitianSpace<Q> H2(diag2(Q(2), Q(1)));
  EXPECT_EQ(inner(H2, {Q(1), Q(1)}, {Q(1), Q(1)}), Q(3));
  EXPECT_THROW(inner(H, {G(1)}, {G(1), G(0)}), invalid_input);
}

TEST(Hermitian, FormAxiomsOnRandomVectors) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 4;
    const HermitianSpace<G> H(gen::positive_gram<G>(rng, n));
    for (int k = 0; k < 10; ++k) {
      const auto u = gen::vector<G>(rng, n), v = gen::vector<G>(rng, n), w = gen::vector<G>(rng, n);
      const G a = gen::scalar<G>(rng);
      Vec<G> au_w(n);
      for (std::size_t i = 0; i < n; ++i) au_w[i] = a * u[i] + w[i];
      ASSERT_EQ(inner(H, au_w, v), a * inner(H, u, v) + inner(H, w, v));
      ASSERT_EQ(inner(H, u, v), conj(inner(H, v, u)));
      const G uu = inner(H, u, u);
      ASSERT_TRUE(is_real(uu));
      ASSERT_EQ(is_zero(uu), is_zero_vector(u));
      ASSERT_TRUE(real_part(uu) >= 0);
    }
  }
}

TEST(Hermitian, RejectsBadGrams) {
  EXPECT_THROW(HermitianSpace<Q>(Matrix<Q>{{Q(1), Q(2)}, {Q(2), Q(1)}}), invalid_input);
  EXPECT_THROW(HermitianSpace<Q>(Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}}), invalid_input);
  EXPECT_THROW(HermitianSpace<G>(Matrix<G>{{G(1), I}, {I, G(1)}}), invalid_input);
  EXPECT_NO_THROW(HermitianSpace<G>(Matrix<G>{{G(2), I}, {-I, G(1)}}));
}

TEST(Hermitian, OrthocomplementExamples) {
  const auto H = HermitianSpace<G>::standard(2);
  const auto S = Subspace<G>::span(2, {{G(1), I}});
  EXPECT_EQ(orthocomplement_sub(H, S), Subspace<G>::span(2, {{I, G(1)}}));
  EXPECT_EQ(orthocomplement_sub(H, Subspace<G>::whole(2)).dim(), 0U);
  EXPECT_EQ(orthocomplement_sub(H, Subspace<G>(2)), Subspace<G>::whole(2));

  const auto H3 = HermitianSpace<Q>::standard(3);
  EXPECT_EQ(orthocomplement_sub(H3, Subspace<Q>::span(3, {{Q(1), Q(1), Q(0)}})),
            Subspace<Q>::span(3, {{Q(1), Q(-1), Q(0)}, {Q(0), Q(0), Q(1)}}));

  const HermitianSpace<Q> Hd(diag2(Q(2), Q(1)));
  const auto Sd = Subspace<Q>::span(2, {{Q(1), Q(1)}});
  EXPECT_TRUE(is_splitting(Hd, Sd));
  EXPECT_EQ(orthocomplement_sub(Hd, Sd), Subspace<Q>::span(2, {{Q(1), Q(-2)}}));
  EXPECT_TRUE(is_splitting(Hd, Subspace<Q>(2)));
}

TEST(Hermitian, OrthomodularityAndDoubleComplement) {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 4; ++n) {
    const HermitianSpace<G> H(gen::positive_gram<G>(rng, n));
    std::vector<Subspace<G>> sample;
    for (int k = 0; k < 40; ++k) sample.push_back(gen::subspace<G>(rng, n));
    EXPECT_TRUE(verify_orthomodular(H, sample).holds);
    for (const auto& s : sample) {
      const auto r = split(H, s);
      ASSERT_EQ(r.dim + r.complement_dim, n);
      ASSERT_EQ(r.intersection_dim, 0U);
    }
  }
}

TEST(Hermitian, LinearAdjointExamples) {
  const auto H = HermitianSpace<G>::standard(2);
  const LinearMap<G> phi(H, H, Matrix<G>{{G(0), G(1)}, {G(0), G(0)}});
  EXPECT_EQ(linear_adjoint(phi).matrix(), (Matrix<G>{{G(0), G(0)}, {G(1), G(0)}}));
  EXPECT_EQ(linear_adjoint(LinearMap<G>::identity(H)), LinearMap<G>::identity(H));
  const HermitianSpace<Q> Hd(diag2(Q(2), Q(1)));
  const LinearMap<Q> psi(Hd, Hd, Matrix<Q>{{Q(0), Q(1)}, {Q(0), Q(0)}});
  EXPECT_EQ(linear_adjoint(psi).matrix(), (Matrix<Q>{{Q(0), Q(0)}, {Q(2), Q(0)}}));
}

TEST(Hermitian, AdjointLawsOnRandomMaps) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 3, m = 1 + (t / 3) % 3;
    const HermitianSpace<G> A(gen::positive_gram<G>(rng, n)), B(gen::positive_gram<G>(rng, m)),
        C(gen::positive_gram<G>(rng, 2));
    const LinearMap<G> phi(A, B, gen::matrix<G>(rng, m, n)), psi(B, C, gen::matrix<G>(rng, 2, m));
    ASSERT_EQ(linear_adjoint(linear_adjoint(phi)), phi);
    ASSERT_EQ(linear_adjoint(compose(psi, phi)), compose(linear_adjoint(phi), linear_adjoint(psi)));
    ASSERT_EQ(linear_adjoint(LinearMap<G>::identity(A)), LinearMap<G>::identity(A));
    const auto adj = linear_adjoint(phi);
    for (int k = 0; k < 5; ++k) {
      const auto u = gen::vector<G>(rng, n), v = gen::vector<G>(rng, m);
      ASSERT_EQ(inner(B, phi(u), v), inner(A, u, adj(v)));
    }
  }
}

TEST(Hermitian, ClassifyLinearExamples) {
  const auto H = HermitianSpace<Q>::standard(2);
  const auto rot = classify_linear(LinearMap<Q>(H, H, Matrix<Q>{{Q(0), Q(-1)}, {Q(1), Q(0)}}));
  EXPECT_TRUE(rot.unitary);
  EXPECT_TRUE(rot.isometry);
  EXPECT_FALSE(rot.projection_onto.has_value());
  const auto half = classify_linear(LinearMap<Q>(H, H, Matrix<Q>{{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}));
  ASSERT_TRUE(half.projection_onto.has_value());
  EXPECT_EQ(*half.projection_onto, Subspace<Q>::span(2, {{Q(1), Q(1)}}));
  const auto coord = classify_linear(LinearMap<Q>(H, H, diag2(Q(1), Q(0))));
  ASSERT_TRUE(coord.projection_onto.has_value());
  EXPECT_EQ(*coord.projection_onto, Subspace<Q>::span(2, {{Q(1), Q(0)}}));
  // An isometry that is not unitary: the first coordinate injection Q¹ → Q².
  const auto inj = classify_linear(
      LinearMap<Q>(HermitianSpace<Q>::standard(1), H, Matrix<Q>{{Q(1)}, {Q(0)}}));
  EXPECT_TRUE(inj.isometry);
  EXPECT_FALSE(inj.unitary);
}

TEST(Hermitian, DirectSums) {
  EXPECT_EQ(direct_sum(HermitianSpace<Q>::standard(1), HermitianSpace<Q>::standard(1)),
            HermitianSpace<Q>::standard(2));
  const auto H1 = HermitianSpace<G>::standard(1);
  const LinearMap<G> phi(H1, H1, Matrix<G>{{I}}), psi(H1, H1, Matrix<G>{{G(2)}});
  const auto s = direct_sum_map(phi, psi);
  EXPECT_EQ(linear_adjoint(s).matrix(), (Matrix<G>{{-I, G(0)}, {G(0), G(2)}}));
  const HermitianSpace<G> H2(Matrix<G>{{G(2), I}, {-I, G(1)}});
  EXPECT_EQ(direct_sum(H2, HermitianSpace<G>::standard(0)), H2);
}

TEST(Hermitian, ProjectionCalculus) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + t % 4;
    const HermitianSpace<G> H(gen::positive_gram<G>(rng, n));
    const auto s = gen::subspace<G>(rng, n);
    const auto p = projector(H, s);
    ASSERT_EQ(p.matrix() * p.matrix(), p.matrix());
    ASSERT_EQ(linear_adjoint(p), p);
    ASSERT_EQ(image(p), s);
    ASSERT_EQ(LinearMap<G>(H, H, Matrix<G>::identity(n) - p.matrix()), projector(H, orthocomplement_sub(H, s)));
    const auto labels = classify_linear(p);
    ASSERT_TRUE(labels.projection_onto.has_value());
    ASSERT_EQ(*labels.projection_onto, s);
  }
}

TEST(Hermitian, Lines) {
  EXPECT_EQ(line_repr<G>({G(2), gq(0, 2)}), (Vec<G>{G(1), I}));
  const auto H = HermitianSpace<G>::standard(2);
  EXPECT_TRUE(lines_orthogonal(H, {G(1), I}, {G(1), -I}));
  const LinearMap<G> swap(H, H, Matrix<G>{{G(0), G(1)}, {G(1), G(0)}});
  const std::vector<Vec<G>> lines{{G(1), G(0)}, {G(0), G(1)}};
  EXPECT_EQ(induced_line_map(swap, lines), (std::vector<Vec<G>>{{G(0), G(1)}, {G(1), G(0)}}));
  const LinearMap<G> kill(H, H, diag2(G(1), G(0)));
  EXPECT_EQ(induced_line_map(kill, lines)[1], (Vec<G>{G(0), G(0)}));
}

TEST(Hermitian, LineMapFunctoriality) {
  std::mt19937_64 rng(23);
  const auto H = HermitianSpace<G>::standard(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vec<G>> lines;
    for (int k = 0; k < 6; ++k) lines.push_back(line_repr(gen::vector<G>(rng, 3)));
    const LinearMap<G> phi(H, H, gen::matrix<G>(rng, 3, 3)), psi(H, H, gen::matrix<G>(rng, 3, 3));
    ASSERT_EQ(induced_line_map(compose(psi, phi), lines), induced_line_map(psi, induced_line_map(phi, lines)));
  }
}

TEST(Hermitian, OrthosetSamples) {
  const auto H = HermitianSpace<G>::standard(2);
  const auto s = orthoset_sample(H, {{G(1), G(0)}, {G(0), G(1)}, {G(1), G(1)}, {G(1), G(-1)}, {G(1), I}, {G(1), -I}});
  EXPECT_EQ(s.orthoset, FiniteOrthoset(7, {{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_TRUE(s.closure_faithful);
  EXPECT_EQ(rank(s.orthoset).value, 2U);
  EXPECT_TRUE(dacey_check(s.orthoset).value());

  EXPECT_EQ(orthoset_sample(H, {{G(1), G(1)}}).orthoset, trivial_orthoset(1));
  const auto H3 = HermitianSpace<Q>::standard(3);
  const auto b = orthoset_sample(H3, {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}});
  EXPECT_EQ(b.orthoset, FiniteOrthoset(4, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(rank(b.orthoset).value, 3U);

  EXPECT_THROW(orthoset_sample(H, {{G(1), I}, {G(2), gq(0, 2)}}), invalid_input);
  EXPECT_THROW(orthoset_sample(H, {{G(0), G(0)}}), invalid_input);

  // e1 and e1+e2 are both orthogonal to e3 only, so the sample closure of
  // {e1} also contains e1+e2 although the span of e1 does not.
  const auto nf = orthoset_sample(H3, {{Q(1), Q(0), Q(0)}, {Q(1), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}});
  EXPECT_FALSE(nf.closure_faithful);
}

TEST(Hermitian, FaithfulSamplesAreDacey) {
  std::mt19937_64 rng(29);
  std::size_t faithful = 0;
  auto run = [&](const auto& H) {
    const auto s = orthoset_sample(H, gen::line_sample(rng, H));
    if (!s.closure_faithful) return;
    ++faithful;
    ASSERT_TRUE(dacey_check(s.orthoset).value());
    ASSERT_TRUE(is_atomistic(s.orthoset));
    ASSERT_EQ(rank(s.orthoset).value, H.dim());
  };
  for (int t = 0; t < 100; ++t) {
    run(HermitianSpace<G>::standard(2));
    run(HermitianSpace<Q>::standard(3));
  }
  EXPECT_GT(faithful, 50U);
}

TEST(Hermitian, StrictSquareRoots) {
  const auto H = HermitianSpace<G>::standard(2);
  const LinearMap<G> U(H, H, (G(-1)) * Matrix<G>::identity(2));
  const LinearMap<G> V(H, H, I * Matrix<G>::identity(2));
  const std::vector<LinearMap<G>> projs{
      LinearMap<G>(H, H, diag2(G(1), G(0))), LinearMap<G>(H, H, diag2(G(0), G(1))),
      LinearMap<G>(H, H, Matrix<G>{{G(q(1, 2)), G(q(1, 2))}, {G(q(1, 2)), G(q(1, 2))}})};
  EXPECT_TRUE(strict_square_root_check(U, V, projs).passed);
  EXPECT_TRUE(strict_square_root_check(LinearMap<G>::identity(H), LinearMap<G>::identity(H), projs).passed);

  const auto H2 = HermitianSpace<Q>::standard(2);
  const LinearMap<Q> Uq(H2, H2, Q(-1) * Matrix<Q>::identity(2));
  const LinearMap<Q> J(H2, H2, Matrix<Q>{{Q(0), Q(-1)}, {Q(1), Q(0)}});
  const auto r = strict_square_root_check(Uq, J, {LinearMap<Q>(H2, H2, diag2(Q(1), Q(0)))});
  EXPECT_TRUE(r.squares_to_u);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.rows[0].with_u);
  EXPECT_FALSE(r.rows[0].with_v);

  EXPECT_THROW(strict_square_root_check(Uq, LinearMap<Q>(H2, H2, diag2(Q(2), Q(1))), {}), invalid_input);
  EXPECT_THROW(strict_square_root_check(Uq, J, {J}), invalid_input);
}

TEST(Scalar, PropertyTests) {
  const auto r = scalar_property_tests<G>({{G(1), I}, {G(0), G(0)}}, {{G(1), G(1)}, {G(1), gq(1, 1)}});
  EXPECT_TRUE(r.formally_real);
  ASSERT_TRUE(r.entries[0].gamma.has_value());
  EXPECT_EQ(norm(*r.entries[0].gamma), q(2));
  EXPECT_FALSE(r.entries[1].gamma.has_value());
  EXPECT_FALSE(r.pythagorean_on_sample);

  const auto rq = scalar_property_tests<Q>({{Q(3), Q(0)}, {q(1, 2)}}, {{Q(3), Q(4)}, {Q(1), Q(1)}});
  EXPECT_TRUE(rq.formally_real);
  EXPECT_EQ(*rq.entries[0].gamma, Q(5));
  EXPECT_FALSE(rq.entries[1].gamma.has_value());

  std::mt19937_64 rng(31);
  std::vector<std::vector<G>> tuples;
  for (int k = 0; k < 200; ++k) tuples.push_back(gen::vector<G>(rng, 1 + k % 4));
  EXPECT_TRUE(scalar_property_tests<G>(tuples, {}).formally_real);
}

TEST(Scalar, NormRootsAgreeWithSearch) {
  for (int p = 0; p <= 40; ++p)
    for (int d = 1; d <= 6; ++d) {
      const Q r = q(p, d);
      const auto g = scalar_traits<G>::norm_root(r);
      bool found = false;
      // x = a/(d·k), y = b/(d·k) covers every rational with small terms.
      for (int a = 0; a <= 40 && !found; ++a)
        for (int b = 0; b <= 40 && !found; ++b)
          for (int k = 1; k <= 3 && !found; ++k) found = q(a * a + b * b, d * d * k * k) == r;
      if (found) ASSERT_TRUE(g.has_value()) << p << "/" << d;
      if (g) ASSERT_EQ(norm(*g), r);
    }
}
