#include "ibc/selftest.hpp"

#include <functional>
#include <random>

#include "ibc/error.hpp"
#include "ibc/harness.hpp"
#include "ibc/invariant.hpp"
#include "ibc/protocol.hpp"

namespace ibc::selftest {

namespace {

struct Draw {
  Session sess;
  std::uint32_t u;
  std::uint64_t v;
  Message msg;
};

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

// A non-aborting honest draw.
Draw draw(const Profile& profile, std::mt19937_64& rng) {
  const std::uint64_t u_hi = profile.u_limit().convert_to<std::uint64_t>() - 1;
  BigInt v_lim = profile.v_limit() < profile.modulus.value() ? profile.v_limit() : profile.modulus.value();
  const std::uint64_t v_hi = v_lim > std::numeric_limits<std::uint64_t>::max()
                                 ? std::numeric_limits<std::uint64_t>::max()
                                 : (v_lim - 1).convert_to<std::uint64_t>();
  for (;;) {
    const Bytes S = random_bytes(rng, 32);
    const Bytes z = random_bytes(rng, kNonceBytes);
    const auto u = static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(1, u_hi)(rng));
    const std::uint64_t v = std::uniform_int_distribution<std::uint64_t>(0, v_hi)(rng);
    try {
      Session sess = protocol::derive_session(S, z, profile);
      Message msg = protocol::alice_generate(sess, u, v);
      return {std::move(sess), u, v, msg};
    } catch (const Error& e) {
      if (e.code() != Errc::AbortZeroIndex && e.code() != Errc::AbortSingular &&
          e.code() != Errc::AbortNonInvertible) {
        throw;
      }
    }
  }
}

struct Ctx {
  const Profile& profile;
  std::mt19937_64& rng;
  int n;  // per-suite sample count
};

using Suite = std::function<std::string(Ctx&)>;  // empty string on success

std::string modmath_suite(Ctx& c) {
  const Modulus& m = c.profile.modulus;
  if (!is_probable_prime(m.value())) return "modulus failed the primality test";
  for (int k = 0; k < c.n; ++k) {
    const FieldElem a = m.elem(BigInt(c.rng()) * BigInt(c.rng()) + 1);
    if (a.is_zero()) continue;
    if (m.mul(a, modmath::mod_inv(a, m)) != m.one()) return "a * a^-1 != 1 for a = " + a.value().str();
    const unsigned e = static_cast<unsigned>(c.rng() % 64);
    FieldElem naive = m.one();
    for (unsigned j = 0; j < e; ++j) naive = m.mul(naive, a);
    if (modmath::mod_pow(a, e, m) != naive) return "square-and-multiply disagrees with repeated product";
  }
  return {};
}

std::string oscillator_suite(Ctx& c) {
  const Modulus& m = c.profile.modulus;
  for (int k = 0; k < c.n; ++k) {
    const Draw d = draw(c.profile, c.rng);
    const BigInt n = BigInt(c.rng()) - BigInt(c.rng());
    const EvalPoint x = EvalPoint::make(n, d.sess.K, m);
    const EvalPoint y = x.shifted(d.sess.C, m);
    if (osc::value_at(d.sess.phi, y) != m.neg(osc::value_at(d.sess.phi, x))) return "phi(x + C) != -phi(x)";
    if (osc::value_at(d.sess.psi, y) != m.neg(osc::value_at(d.sess.psi, x))) return "psi(x + C) != -psi(x)";
  }
  const Bytes S(32, 0x5a), z(32, 0xa5);
  const auto table = osc::generate(S, z, osc::Tag::Phi, 16, 8, m, osc::ModePolicy::Table);
  const auto lazy = osc::generate(S, z, osc::Tag::Phi, 16, 8, m, osc::ModePolicy::OnDemand);
  for (int k = 0; k < 10 * c.n; ++k) {
    const BigInt j = BigInt(static_cast<std::int64_t>(c.rng() % 100000)) - 50000;
    if (table.eval_index(j) != lazy.eval_index(j)) return "table and on-demand modes disagree at " + j.str();
  }
  return {};
}

std::string invariant_suite(Ctx& c) {
  for (int k = 0; k < c.n; ++k) {
    const Draw d = draw(c.profile, c.rng);
    const auto tu = invariant::evaluate_tuple(d.sess, d.u, d.v);
    if (!invariant::cross_multiplied_holds(tu, d.sess.p, d.sess.mod)) return "cross-multiplied identity fails";
    try {
      if (invariant::eval_invariant(tu, d.sess.mod) != invariant::expected_constant(d.sess.p, d.u, d.sess.mod)) {
        return "invariant != 1/p^(2u) for u = " + std::to_string(d.u) + ", v = " + std::to_string(d.v);
      }
    } catch (const Error& e) {
      // 0/0 tuple; the cross-multiplied check above already covered it.
      if (e.code() != Errc::SingularDenominator) throw;
    }
  }
  return {};
}

std::string protocol_suite(Ctx& c) {
  for (int k = 0; k < c.n; ++k) {
    const Draw d = draw(c.profile, c.rng);
    if (protocol::bob_verify(d.sess.S, d.msg, c.profile) != d.v) return "round trip lost v";
    const Message back = deserialize(serialize(d.msg), c.profile.modulus);
    if (!(back == d.msg)) return "serialization round trip changed the message";
  }
  return {};
}

std::string tamper_suite(Ctx& c) {
  const Draw d = draw(c.profile, c.rng);
  const WireBytes wire = serialize(d.msg);
  for (std::size_t bit = 0; bit < wire.size() * 8; ++bit) {
    WireBytes bad = wire;
    bad[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    try {
      protocol::bob_verify(d.sess.S, deserialize(bad, c.profile.modulus), c.profile);
      return "flip of bit " + std::to_string(bit) + " was accepted";
    } catch (const Error&) {
    }
  }
  return {};
}

std::string completion_suite(Ctx& c) {
  if (c.profile.modulus.value() > (BigInt(1) << 16)) return {};
  for (int k = 0; k < c.n; ++k) {
    const auto game = harness::new_game(c.profile, c.rng());
    const auto r = harness::completion_sweep(game);
    if (!r.unique_is_s3) return "completion not unique for game seed " + std::to_string(game.seed());
  }
  return {};
}

std::string harness_suite(Ctx& c) {
  const auto spliced = harness::reuse_experiment(c.profile, 5, c.rng());
  if (spliced.accepted != 0) return std::to_string(spliced.accepted) + " splices accepted";
  const auto report = harness::run_random_adversary(c.profile, 100, c.rng());
  // Loose sanity bound; the acceptance gate checks the real one.
  if (report.wins > 10) return "random adversary won " + std::to_string(report.wins) + " of 100";
  return {};
}

}  // namespace

std::vector<SuiteResult> run_all(const Profile& profile, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool big = profile.modulus.value() > (BigInt(1) << 64);
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"modmath", modmath_suite},     {"oscillator", oscillator_suite}, {"invariant", invariant_suite},
      {"protocol", protocol_suite},   {"tamper", tamper_suite},         {"completion", completion_suite},
      {"harness", harness_suite},
  };
  std::vector<SuiteResult> out;
  for (const auto& [name, suite] : suites) {
    Ctx c{profile, rng, big ? 10 : 50};
    SuiteResult r{name, false, {}};
    try {
      r.detail = suite(c);
      r.passed = r.detail.empty();
      if (r.passed) r.detail = "ok";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ibc::selftest
