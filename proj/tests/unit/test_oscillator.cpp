#include <gtest/gtest.h>

#include <random>

#include "ibc/error.hpp"
#include "ibc/oscillator.hpp"

using namespace ibc;

namespace {

const Modulus& m257() {
  static const Modulus m = Modulus::prime(257);
  return m;
}

const std::vector<long long> kFixtureSeed{2, -1, 0, 3, -2, 1, 1, -3};

osc::Oscillator fixture_osc() {
  const auto& m = m257();
  osc::OscSeed seed{{}, 4, 2};
  for (long long v : kFixtureSeed) seed.values.push_back(m.elem(v));
  return osc::Oscillator::from_seed(seed, m);
}

// Independent oracle: the 2P-periodic table unrolled over [-2P, 2P).
long long unrolled(long long j) {
  const long long P = 8;
  std::vector<long long> period;
  for (long long v : kFixtureSeed) period.push_back(v);
  for (long long v : kFixtureSeed) period.push_back(-v);
  long long r = ((j % (2 * P)) + 2 * P) % (2 * P);
  return period[static_cast<std::size_t>(r)];
}

}  // namespace

TEST(Oscillator, FixtureIndex366IsMinusOne) {
  EXPECT_EQ(fixture_osc().eval_index(366), m257().elem(-1));
}

TEST(Oscillator, FixtureMatchesUnrolledTable) {
  const auto o = fixture_osc();
  for (long long j = -40; j < 40; ++j) EXPECT_EQ(o.eval_index(j), m257().elem(unrolled(j))) << j;
  EXPECT_EQ(o.eval_index(-2).value(), 256);
}

TEST(Oscillator, AntiperiodAndPeriodOnIndices) {
  const auto o = fixture_osc();
  const auto& m = m257();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const BigInt j = BigInt(static_cast<long long>(rng() % 2000000)) - 1000000;
    EXPECT_EQ(o.eval_index(j + 8), m.neg(o.eval_index(j)));
    EXPECT_EQ(o.eval_index(j + 16), o.eval_index(j));
  }
}

TEST(Oscillator, ValueAtIsAntiperiodicInItsArgument) {
  const auto& m = m257();
  const Bytes S(16, 1), z(32, 2);
  for (auto policy : {osc::ModePolicy::Table, osc::ModePolicy::OnDemand}) {
    const auto o = osc::generate(S, z, osc::Tag::Psi, 12, 5, m, policy);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 1000; ++k) {
      const EvalPoint x = EvalPoint::make(BigInt(static_cast<long long>(rng() % 100000)) - 50000, 12, m);
      EXPECT_EQ(osc::value_at(o, x.shifted(5, m)), m.neg(osc::value_at(o, x)));
    }
  }
}

TEST(Oscillator, EvalAtScalesByC) {
  const auto& m = m257();
  const auto o = fixture_osc();
  // t = 183/4 lands on index C * 183 = 366.
  EXPECT_EQ(osc::eval_at(o, EvalPoint::make(183, 4, m)), m.elem(-1));
  // An integer step of t is a full antiperiod of the argument C t.
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const EvalPoint t = EvalPoint::make(static_cast<long long>(rng() % 4000) - 2000, 4, m);
    EXPECT_EQ(osc::eval_at(o, t.shifted(1, m)), m.neg(osc::eval_at(o, t)));
  }
  EXPECT_THROW(osc::eval_at(o, EvalPoint::make(1, 3, m)), Error);
}

TEST(Oscillator, TableAndOnDemandAgree) {
  const auto& m = m257();
  const Bytes S{9, 9, 9}, z(32, 7);
  const auto table = osc::generate(S, z, osc::Tag::Phi, 64, 32, m, osc::ModePolicy::Table);
  const auto lazy = osc::generate(S, z, osc::Tag::Phi, 64, 32, m, osc::ModePolicy::OnDemand);
  ASSERT_TRUE(table.is_table());
  ASSERT_FALSE(lazy.is_table());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10000; ++k) {
    const BigInt j = BigInt(static_cast<long long>(rng() % 1000000)) - 500000;
    ASSERT_EQ(table.eval_index(j), lazy.eval_index(j)) << j;
  }
}

TEST(Oscillator, TagsAndKeysSeparateStreams) {
  const auto& m = m257();
  const Bytes S{1}, z{2};
  const auto phi = osc::generate(S, z, osc::Tag::Phi, 8, 8, m, osc::ModePolicy::Table);
  const auto psi = osc::generate(S, z, osc::Tag::Psi, 8, 8, m, osc::ModePolicy::Table);
  const auto other = osc::generate(Bytes{3}, z, osc::Tag::Phi, 8, 8, m, osc::ModePolicy::Table);
  EXPECT_NE(phi.table_values(), psi.table_values());
  EXPECT_NE(phi.table_values(), other.table_values());
  EXPECT_EQ(phi, osc::generate(S, z, osc::Tag::Phi, 8, 8, m, osc::ModePolicy::Table));
}

TEST(Oscillator, TableSizeLimit) {
  const auto& m = m257();
  try {
    osc::Oscillator::table_from_key(Bytes{1}, BigInt(1) << 11, BigInt(1) << 10, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SeedTooLarge);
  }
  // Auto falls back to on-demand instead of failing.
  EXPECT_FALSE(osc::generate(Bytes{1}, Bytes{2}, osc::Tag::Phi, BigInt(1) << 11, BigInt(1) << 10, m).is_table());
  EXPECT_THROW(osc::generate(Bytes{1}, Bytes{2}, osc::Tag::Phi, 0, 3, m), Error);
}

TEST(Oscillator, SeedExportImportRoundTrip) {
  const auto& m = m257();
  const auto o = fixture_osc();
  const std::string text = osc::export_seed(o);
  const auto back = osc::Oscillator::from_seed(osc::import_seed(text, 4, 2, m), m);
  EXPECT_EQ(back, o);
  EXPECT_EQ(osc::import_seed("-1\n2\n3\n4\n5\n6\n7\n8\n", 4, 2, m).values[0].value(), 256);
  EXPECT_THROW(osc::import_seed("1\n2\n", 4, 2, m), Error);
  EXPECT_THROW(osc::import_seed("1\nx\n3\n4\n5\n6\n7\n8\n", 4, 2, m), Error);
  osc::OscSeed short_seed{{m.one()}, 4, 2};
  EXPECT_THROW(osc::Oscillator::from_seed(short_seed, m), Error);
}
