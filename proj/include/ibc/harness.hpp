#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ibc/profile.hpp"
#include "ibc/wire.hpp"

namespace ibc::harness {

// Everything an adversary may see: the transcript and the public modulus.
struct PublicView {
  Message transcript;
  Modulus mod;
  unsigned u_bits;
  unsigned v_bits;
};

struct Forgery {
  FieldElem s_star;
  BigInt delta_star;
};

// Adversaries only ever receive a PublicView; the hidden state has no
// accessor reachable from this signature.
using Adversary = std::function<Forgery(const PublicView&, std::mt19937_64&)>;

struct CompletionSweep {
  std::uint64_t count = 0;
  std::vector<FieldElem> witnesses;
  // The completion is unique unless t + 2u + 2v + 1 vanishes mod M, which the
  // singular-point abort already excludes from valid games.
  bool degenerate = false;
  bool unique_is_s3 = false;
};

class GameInstance {
 public:
  const Profile& profile() const noexcept { return profile_; }
  const Message& transcript() const noexcept { return transcript_; }
  PublicView public_view() const;
  std::uint64_t seed() const noexcept { return seed_; }
  // Number of (z, v) redraws forced by aborts while producing the transcript.
  unsigned redraws() const noexcept { return redraws_; }

  // Referee side only. Adversaries receive a PublicView and never the game.
  struct Secrets {
    Bytes S;
    std::uint32_t u;
    std::uint64_t v;
    FieldElem s0;
    FieldElem s2;
  };
  Secrets reveal() const;

 private:
  struct Hidden;

  GameInstance(Profile profile, Message transcript, std::shared_ptr<const Hidden> hidden, std::uint64_t seed,
               unsigned redraws);

  Profile profile_;
  Message transcript_;
  std::shared_ptr<const Hidden> hidden_;
  std::uint64_t seed_;
  unsigned redraws_;

  friend GameInstance new_game(const Profile& profile, std::uint64_t seed);
  friend bool adjudicate(const GameInstance& game, const Forgery& f);
  friend CompletionSweep completion_sweep(const GameInstance& game);
};

// Fresh (S, z, u, v) from a seeded generator; aborting draws are redrawn.
GameInstance new_game(const Profile& profile, std::uint64_t seed);

// Wins iff delta* avoids the honest offsets {2v+1, 2u+2v+1}, the recovery
// divisor with s* in place of s3 is invertible, and the tag recomputed over
// (recovered v, s1, s*) equals the transcript's tag.
bool adjudicate(const GameInstance& game, const Forgery& f);

struct Interval {
  double low;
  double high;
};

// Wilson score interval at 95% confidence.
Interval wilson95(std::uint64_t wins, std::uint64_t trials);

struct AdvantageReport {
  std::string game_id;
  std::string adversary;
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  Interval ci{0, 0};
  std::uint64_t redraws = 0;

  double estimate() const { return trials ? double(wins) / double(trials) : 0.0; }
};

// Game k uses seed `seed + k`; the adversary draws from its own generator.
AdvantageReport run_adversary(const Profile& profile, const std::string& name, const Adversary& adversary,
                              std::uint64_t trials, std::uint64_t seed);

// Uniform s* in Z_M and uniform delta* in [0, 2^32). Requires trials >= 100.
Adversary random_adversary();
AdvantageReport run_random_adversary(const Profile& profile, std::uint64_t trials, std::uint64_t seed);

std::string csv_header();
std::string csv_row(const AdvantageReport& r);
std::string summary(const AdvantageReport& r);

// Sweeps every s* in Z_M and counts those whose recovered value is the
// honest v. Requires M <= 2^16.
CompletionSweep completion_sweep(const GameInstance& game);

struct ReuseResult {
  std::uint64_t transcripts = 0;
  std::uint64_t splices = 0;
  std::uint64_t accepted = 0;
  // Splices that reproduce an honest transcript byte for byte (possible when
  // two transcripts share s1 or s3 at toy size); not counted as splices.
  std::uint64_t identical_skipped = 0;
};

// Fixes (S, z, u), emits v_max transcripts with distinct v and feeds every
// pairwise splice (s3 swap, s1 swap, tag replay) to the verifier.
// Requires 1 <= v_max <= 1000 and v_max no larger than the v range.
ReuseResult reuse_experiment(const Profile& profile, unsigned v_max, std::uint64_t seed);

// V! / (V - m)!: injective assignments of m observed transcripts to V values.
BigInt candidate_matchings(unsigned V, unsigned m);

}  // namespace ibc::harness
