#include "ibc/harness.hpp"

#include <openssl/crypto.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "ibc/error.hpp"
#include "ibc/invariant.hpp"
#include "ibc/protocol.hpp"

namespace ibc::harness {

namespace {

constexpr unsigned kMaxRedraws = 10000;
constexpr std::size_t kGameSecretBytes = 32;

bool is_abort(Errc c) {
  return c == Errc::AbortZeroIndex || c == Errc::AbortSingular || c == Errc::AbortNonInvertible;
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() & 0xff);
  return out;
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  // 64 extra bits keep the modulo bias negligible.
  BigInt acc = 0;
  const std::size_t words = byte_length(bound) / 8 + 2;
  for (std::size_t k = 0; k < words; ++k) acc = (acc << 64) | BigInt(rng());
  return acc % bound;
}

std::uint64_t v_bound(const Profile& profile) {
  BigInt b = profile.v_limit();
  if (profile.modulus.value() < b) b = profile.modulus.value();
  if (b > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return b.convert_to<std::uint64_t>();
}

std::uint32_t draw_u(std::mt19937_64& rng, const Profile& profile) {
  const std::uint64_t hi = profile.u_limit().convert_to<std::uint64_t>() - 1;
  return static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(1, hi)(rng));
}

std::uint64_t draw_v(std::mt19937_64& rng, const Profile& profile) {
  const std::uint64_t bound = v_bound(profile);
  const std::uint64_t hi = bound == std::numeric_limits<std::uint64_t>::max() ? bound : bound - 1;
  return std::uniform_int_distribution<std::uint64_t>(0, hi)(rng);
}

Message with_parts(const Message& base, const FieldElem& s1, const FieldElem& s3, const Digest& tag) {
  Message m = base;
  m.s1 = s1;
  m.s3 = s3;
  m.h_check = tag;
  return m;
}

}  // namespace

struct GameInstance::Hidden {
  Session sess;
  std::uint32_t u;
  std::uint64_t v;
  FieldElem s0;
  FieldElem s2;
};

GameInstance::GameInstance(Profile profile, Message transcript, std::shared_ptr<const Hidden> hidden,
                           std::uint64_t seed, unsigned redraws)
    : profile_(std::move(profile)),
      transcript_(std::move(transcript)),
      hidden_(std::move(hidden)),
      seed_(seed),
      redraws_(redraws) {}

PublicView GameInstance::public_view() const {
  return PublicView{transcript_, profile_.modulus, profile_.u_bits, profile_.v_bits};
}

GameInstance::Secrets GameInstance::reveal() const {
  return {hidden_->sess.S, hidden_->u, hidden_->v, hidden_->s0, hidden_->s2};
}

GameInstance new_game(const Profile& profile, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Bytes S = random_bytes(rng, std::max(kGameSecretBytes, profile.min_secret_bytes));
  for (unsigned redraws = 0; redraws < kMaxRedraws; ++redraws) {
    const Bytes z = random_bytes(rng, kNonceBytes);
    const std::uint32_t u = draw_u(rng, profile);
    const std::uint64_t v = draw_v(rng, profile);
    try {
      Session sess = protocol::derive_session(S, z, profile);
      Message msg = protocol::alice_generate(sess, u, v);
      const auto off = invariant::Offsets::of(u, v);
      FieldElem s0 = genfunc::evaluate(sess.lower(), sess.t);
      FieldElem s2 = genfunc::evaluate(sess.upper(), sess.t.shifted(off.d2, sess.mod));
      auto hidden = std::make_shared<const GameInstance::Hidden>(
          GameInstance::Hidden{std::move(sess), u, v, std::move(s0), std::move(s2)});
      return GameInstance(profile, std::move(msg), std::move(hidden), seed, redraws);
    } catch (const Error& e) {
      if (!is_abort(e.code())) throw;
    }
  }
  throw Error(Errc::InvalidArgument, "profile aborts on every draw");
}

bool adjudicate(const GameInstance& game, const Forgery& f) {
  const auto& h = *game.hidden_;
  const Modulus& m = h.sess.mod;
  const Message& msg = game.transcript_;
  const auto off = invariant::Offsets::of(h.u, h.v);
  if (f.delta_star == off.d1 || f.delta_star == off.d3) return false;
  if (f.s_star.value() >= m.value()) return false;
  if (!invariant::check_denominator(msg.s1, f.s_star, h.sess.p, h.u, m)) return false;
  const FieldElem v_star = invariant::recover_v(h.s0, msg.s1, h.s2, f.s_star, h.sess.t.image, h.u, h.sess.p, m);
  if (v_star.value() > std::numeric_limits<std::uint64_t>::max()) return false;
  const Digest tag = protocol::check_hash(h.sess.S, v_star.value().convert_to<std::uint64_t>(), msg.s1, f.s_star,
                                          msg.u, msg.z);
  return CRYPTO_memcmp(tag.data(), msg.h_check.data(), tag.size()) == 0;
}

Interval wilson95(std::uint64_t wins, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = double(trials);
  const double phat = double(wins) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  return {wins == 0 ? 0.0 : std::max(0.0, center - half), wins == trials ? 1.0 : std::min(1.0, center + half)};
}

AdvantageReport run_adversary(const Profile& profile, const std::string& name, const Adversary& adversary,
                              std::uint64_t trials, std::uint64_t seed) {
  AdvantageReport r;
  r.game_id = profile.name + ":" + std::to_string(seed);
  r.adversary = name;
  r.trials = trials;
  std::mt19937_64 adv_rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (std::uint64_t k = 0; k < trials; ++k) {
    GameInstance game = new_game(profile, seed + k);
    r.redraws += game.redraws();
    if (adjudicate(game, adversary(game.public_view(), adv_rng))) ++r.wins;
  }
  r.ci = wilson95(r.wins, r.trials);
  return r;
}

Adversary random_adversary() {
  return [](const PublicView& view, std::mt19937_64& rng) {
    Forgery f;
    f.s_star = view.mod.elem(uniform_below(rng, view.mod.value()));
    f.delta_star = BigInt(rng() >> 32);
    return f;
  };
}

AdvantageReport run_random_adversary(const Profile& profile, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 100) throw Error(Errc::InvalidArgument, "random adversary needs at least 100 trials");
  return run_adversary(profile, "random", random_adversary(), trials, seed);
}

std::string csv_header() { return "game_id,adversary,trials,wins,ci_low,ci_high"; }

std::string csv_row(const AdvantageReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%s,%llu,%llu,%.6f,%.6f", r.game_id.c_str(), r.adversary.c_str(),
                static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(r.wins), r.ci.low,
                r.ci.high);
  return buf;
}

std::string summary(const AdvantageReport& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf, "%s adversary on %s: %llu/%llu wins, advantage %.6f (95%% CI %.6f..%.6f), %llu redraws",
                r.adversary.c_str(), r.game_id.c_str(), static_cast<unsigned long long>(r.wins),
                static_cast<unsigned long long>(r.trials), r.estimate(), r.ci.low, r.ci.high,
                static_cast<unsigned long long>(r.redraws));
  return buf;
}

CompletionSweep completion_sweep(const GameInstance& game) {
  const auto& h = *game.hidden_;
  const Modulus& m = h.sess.mod;
  if (m.value() > (BigInt(1) << 16)) throw Error(Errc::Unsupported, "exhaustive sweep needs M <= 2^16");
  const Message& msg = game.transcript_;
  const FieldElem v = m.elem(BigInt(h.v));
  const auto off = invariant::Offsets::of(h.u, h.v);

  CompletionSweep r;
  r.degenerate = h.sess.t.shifted(off.d3, m).image.is_zero();
  const auto M = m.value().convert_to<std::uint32_t>();
  for (std::uint32_t s = 0; s < M; ++s) {
    const FieldElem s_star = m.elem(BigInt(s));
    if (!invariant::check_denominator(msg.s1, s_star, h.sess.p, h.u, m)) continue;
    if (invariant::recover_v(h.s0, msg.s1, h.s2, s_star, h.sess.t.image, h.u, h.sess.p, m) == v) {
      ++r.count;
      r.witnesses.push_back(s_star);
    }
  }
  r.unique_is_s3 = r.count == 1 && r.witnesses.front() == msg.s3;
  return r;
}

ReuseResult reuse_experiment(const Profile& profile, unsigned v_max, std::uint64_t seed) {
  if (v_max < 1 || v_max > 1000) throw Error(Errc::InvalidArgument, "v_max must be in [1, 1000]");
  if (BigInt(v_max) > BigInt(v_bound(profile))) throw Error(Errc::InvalidArgument, "v_max exceeds the v range");
  std::mt19937_64 rng(seed);
  const Bytes S = random_bytes(rng, std::max(kGameSecretBytes, profile.min_secret_bytes));
  const std::uint32_t u = draw_u(rng, profile);

  for (unsigned attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const Bytes z = random_bytes(rng, kNonceBytes);
    std::optional<Session> sess;
    try {
      sess.emplace(protocol::derive_session(S, z, profile));
    } catch (const Error& e) {
      if (!is_abort(e.code())) throw;
      continue;
    }

    // Distinct v values; those that abort for this session are skipped.
    std::vector<Message> msgs;
    std::vector<std::uint64_t> used;
    unsigned misses = 0;
    while (msgs.size() < v_max && misses < kMaxRedraws) {
      const std::uint64_t v = draw_v(rng, profile);
      if (std::find(used.begin(), used.end(), v) != used.end()) {
        ++misses;
        continue;
      }
      used.push_back(v);
      try {
        msgs.push_back(protocol::alice_generate(*sess, u, v));
      } catch (const Error& e) {
        if (!is_abort(e.code())) throw;
        ++misses;
      }
    }
    if (msgs.size() < v_max) continue;

    ReuseResult r;
    r.transcripts = msgs.size();
    auto probe = [&](const Message& forged, const Message& a, const Message& b) {
      if (forged == a || forged == b) {
        ++r.identical_skipped;
        return;
      }
      ++r.splices;
      try {
        protocol::bob_verify(S, forged, profile);
        ++r.accepted;
      } catch (const Error&) {
      }
    };
    for (std::size_t a = 0; a < msgs.size(); ++a) {
      for (std::size_t b = 0; b < msgs.size(); ++b) {
        if (a == b) continue;
        const Message& A = msgs[a];
        const Message& B = msgs[b];
        probe(with_parts(A, A.s1, B.s3, A.h_check), A, B);
        probe(with_parts(A, B.s1, A.s3, A.h_check), A, B);
        probe(with_parts(A, A.s1, A.s3, B.h_check), A, B);
      }
    }
    return r;
  }
  throw Error(Errc::InvalidArgument, "could not produce enough transcripts");
}

BigInt candidate_matchings(unsigned V, unsigned m) {
  if (m > V) throw Error(Errc::InvalidArgument, "cannot match more transcripts than values");
  BigInt out = 1;
  for (unsigned k = 0; k < m; ++k) out *= V - k;
  return out;
}

}  // namespace ibc::harness
