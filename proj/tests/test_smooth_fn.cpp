#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace nearpoint;
using support::element;

TEST(SmoothFn, ProlongSquareAtDualPoint) {
  const auto d = make_jet_algebra_1d(1);
  const NearPoint xi(d, {element(d, {2, 3})});
  EXPECT_EQ(apoly_eval(prolong(support::poly(1, "x1^2"), d), xi), element(d, {4, 12}));
}

TEST(SmoothFn, ProlongCubeAtSecondOrderPoint) {
  const auto c = make_jet_algebra_1d(2);
  const NearPoint xi(c, {element(c, {1, 1})});
  EXPECT_EQ(apoly_eval(prolong(support::poly(1, "x1^3"), c), xi), element(c, {1, 3, 3}));
}

TEST(SmoothFn, ProlongOne) {
  const auto c = make_jet_algebra_1d(2);
  EXPECT_EQ(prolong(constant_poly(2, 1), c), constant_apoly(2, AElement::one(c)));
}

TEST(SmoothFn, Evaluate) {
  const auto d = make_jet_algebra_1d(1);
  const NearPoint xi(d, {element(d, {2, 3})});
  const AElement a = element(d, {5, -7});
  EXPECT_EQ(apoly_eval(constant_apoly(1, a), xi), a);
  EXPECT_EQ(apoly_eval(coordinate_A(d, 1, 0), xi), element(d, {2, 3}));
  const NearPoint one_eps(d, {element(d, {1, 1})});
  EXPECT_EQ(apoly_eval(support::apoly(d, 1, "eps*x1"), one_eps), element(d, {0, 1}));
}

TEST(SmoothFn, EvaluateRejectsOtherAlgebra) {
  const auto d = make_jet_algebra_1d(1);
  const auto e = make_jet_algebra_1d(1);
  EXPECT_THROW(apoly_eval(coordinate_A(d, 1, 0), NearPoint(e, {AElement::one(e)})), MismatchError);
}

TEST(SmoothFn, ScaleLaws) {
  const auto d = make_jet_algebra_1d(1);
  const APoly phi = support::apoly(d, 2, "(1 + eps)*x1^2 - x2");
  EXPECT_TRUE(a_scale(AElement::zero(d), phi).is_zero());
  const AElement eps = AElement::basis(d, 1);
  EXPECT_TRUE(a_scale(eps, a_scale(eps, phi)).is_zero());
}

TEST(SmoothFn, Partial) {
  const auto d = make_jet_algebra_1d(1);
  EXPECT_EQ(prolong(support::poly(1, "x1^2"), d).partial(0), prolong(support::poly(1, "2*x1"), d));
  EXPECT_TRUE(constant_apoly(1, element(d, {3, 4})).partial(0).is_zero());
  EXPECT_EQ(support::apoly(d, 1, "eps*x1^2").partial(0), support::apoly(d, 1, "2*eps*x1"));
  EXPECT_THROW(support::apoly(d, 1, "x1").partial(1), MismatchError);
}

TEST(SmoothFn, Printing) {
  EXPECT_EQ(to_string(support::poly(3, "3/2*x1^2*x2 - x3")), "3/2*x1^2*x2 - x3");
  EXPECT_EQ(to_string(support::poly(2, "1 - x2 + x1")), "x1 - x2 + 1");
  const auto c = make_jet_algebra_1d(2);
  EXPECT_EQ(to_string(support::apoly(c, 2, "eps*x1^2 + (1 + eps)*x2")), "eps*x1^2 + (1 + eps)*x2");
  EXPECT_EQ(to_string(zero_apoly(c, 2)), "0");
}

TEST(SmoothFn, RandomProlongationProperties) {
  for (const auto& alg : oracle::test_algebras()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::uint64_t i = 0; i < 40; ++i) {
        SampleRng rng(sample_seed(17, "smooth-fn", i));
        const Poly f = random_poly(rng, n), g = random_poly(rng, n);
        const NearPoint xi = random_near_point(rng, alg, n);
        EXPECT_EQ(prolong(f + g, alg), prolong(f, alg) + prolong(g, alg));
        EXPECT_EQ(prolong(f * g, alg), prolong(f, alg) * prolong(g, alg));
        EXPECT_EQ(apoly_eval(prolong(f, alg), xi), oracle::taylor_eval(f, xi)) << to_string(f);
        EXPECT_EQ(augmentation(apoly_eval(prolong(f, alg), xi)), poly_eval(f, xi.origin()));
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(prolong(f, alg).partial(j), prolong(f.partial(j), alg));
      }
    }
  }
}

TEST(SmoothFn, RealValuedFlag) {
  const auto d = make_jet_algebra_1d(1);
  EXPECT_TRUE(real_constant(d, 1, 3).real_valued());
  EXPECT_TRUE(looks_real_valued(real_constant(d, 1, 3)));
  EXPECT_FALSE(looks_real_valued(constant_apoly(1, AElement::basis(d, 1))));
}
