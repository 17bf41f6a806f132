#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ibc/wire.hpp"

namespace ibc::fixtures {

struct FixtureVector {
  std::string profile;
  Bytes S;
  Bytes z;
  std::uint32_t u = 0;
  std::uint64_t v = 0;
  WireBytes message{};
};

// Deterministic regression vectors over the toy, mini and production
// profiles. S and z are hash-derived from the vector index.
std::vector<FixtureVector> fixture_vectors();

// "vector <profile> <S hex> <z hex> <u> <v> <message hex>" per line.
std::string format_vectors(const std::vector<FixtureVector>& vectors);
std::vector<FixtureVector> parse_vectors(std::string_view text);

// Full fixture file: vectors followed by the worked-example audit, every
// audit line prefixed with "audit\t".
std::string fixture_file();

}  // namespace ibc::fixtures
