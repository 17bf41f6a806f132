#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ibc/invariant.hpp"
#include "test_util.hpp"

using namespace ibc;

TEST(Invariant, ExactOnRandomToySessions) {
  const Profile toy = Profile::toy();
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const auto h = test::honest_draw(toy, rng);
    const auto tu = invariant::evaluate_tuple(h.sess, h.u, h.v);
    ASSERT_TRUE(invariant::cross_multiplied_holds(tu, h.sess.p, h.sess.mod));
    try {
      EXPECT_EQ(invariant::eval_invariant(tu, h.sess.mod), invariant::expected_constant(h.sess.p, h.u, h.sess.mod));
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SingularDenominator);
    }
  }
  EXPECT_GT(checked, 290);
}

TEST(Invariant, BaseCaseIsInversePSquared) {
  const Profile toy = Profile::toy();
  std::mt19937_64 rng(22);
  for (int k = 0; k < 50; ++k) {
    const auto h = test::honest_draw(toy, rng, 1u, 0ull);
    const auto tu = invariant::evaluate_tuple(h.sess, 1, 0);
    const Modulus& m = h.sess.mod;
    try {
      EXPECT_EQ(invariant::eval_invariant(tu, m), modmath::mod_inv(m.mul(h.sess.p, h.sess.p), m));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SingularDenominator);
    }
  }
}

TEST(Invariant, RecoverVInvertsTheTuple) {
  for (const Profile& prof : {Profile::toy(), Profile::mini(), Profile::production()}) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 30; ++k) {
      const auto h = test::honest_draw(prof, rng);
      const auto tu = invariant::evaluate_tuple(h.sess, h.u, h.v);
      ASSERT_TRUE(invariant::check_denominator(tu.s1, tu.s3, h.sess.p, h.u, h.sess.mod));
      const FieldElem v = invariant::recover_v(tu.s0, tu.s1, tu.s2, tu.s3, h.sess.t.image, h.u, h.sess.p, h.sess.mod);
      EXPECT_EQ(v.value(), h.v) << prof.name;
    }
  }
}

TEST(Invariant, ForcedSingularRecoveryDivisor) {
  const Profile toy = Profile::toy();
  std::mt19937_64 rng(24);
  const auto h = test::honest_draw(toy, rng);
  const Modulus& m = h.sess.mod;
  const FieldElem s1 = m.elem(42);
  const FieldElem s3 = m.mul(s1, modmath::mod_pow(h.sess.p, 2 * BigInt(h.u), m));
  EXPECT_FALSE(invariant::check_denominator(s1, s3, h.sess.p, h.u, m));
  try {
    invariant::recover_v(m.one(), s1, m.one(), s3, h.sess.t.image, h.u, h.sess.p, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularDenominator);
  }
}

TEST(Invariant, FiberSharesTheConstant) {
  const Profile toy = Profile::toy();
  std::mt19937_64 rng(25);
  const auto h = test::honest_draw(toy, rng);
  std::vector<BigInt> vs;
  for (int v = 0; v <= 20; ++v) vs.push_back(v);
  const auto fiber = invariant::enumerate_fiber(h.sess, h.u, vs);
  ASSERT_EQ(fiber.size(), 21u);
  const auto base = invariant::evaluate_tuple(h.sess, h.u, 0);
  for (std::size_t k = 0; k < fiber.size(); ++k) {
    invariant::InvariantTuple tu = base;
    tu.v = vs[k];
    tu.s1 = fiber[k].s1;
    tu.s3 = fiber[k].s3;
    EXPECT_TRUE(invariant::cross_multiplied_holds(tu, h.sess.p, h.sess.mod));
  }
}

TEST(Invariant, HonestOffsets) {
  const auto off = invariant::Offsets::of(5, 17);
  EXPECT_EQ(off.d1, 35);
  EXPECT_EQ(off.d2, 10);
  EXPECT_EQ(off.d3, 45);
}

TEST(Analytic, OddFrequenciesGiveInversePSquared) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> P(0.5, 5.0), Q(1.0, 10.0), T(-3.0, 3.0);
  for (int k = 0; k < 300; ++k) {
    const double p = P(rng);
    double t = T(rng);
    if (std::min({std::abs(t), std::abs(t + 1), std::abs(t + 2), std::abs(t + 3)}) < 0.05) continue;
    const long r1 = 2 * static_cast<long>(rng() % 4) + 1, r2 = 2 * static_cast<long>(rng() % 4) + 1;
    const double got = invariant::analytic_invariant_check(p, Q(rng), -Q(rng), r1, r2, t);
    EXPECT_NEAR(got * p * p, 1.0, 1e-9);
  }
}

TEST(Analytic, EvenFrequencyBreaksIt) {
  EXPECT_GT(std::abs(invariant::analytic_invariant_check(2.0, 3.0, 0.0, 2, 1, 0.3) * 4.0 - 1.0), 1e-3);
}

TEST(Analytic, DomainErrors) {
  EXPECT_THROW(invariant::analytic_invariant_check(0.0, 1, 1, 1, 1, 0.5), Error);
  EXPECT_THROW(invariant::analytic_invariant_check(2.0, 1, 1, 1, 1, -2.0), Error);
  EXPECT_THROW(invariant::analytic_invariant_check(2.0, 1, 1, 1, 1, 0.0), Error);
}
