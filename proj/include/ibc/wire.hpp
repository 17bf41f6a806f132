#pragma once

#include <array>

#include "ibc/modmath.hpp"

namespace ibc {

inline constexpr std::size_t kFieldBytes = 32;
inline constexpr std::size_t kNonceBytes = 32;
inline constexpr std::size_t kMessageBytes = 2 * kFieldBytes + 4 + kNonceBytes + 32;

using Nonce = std::array<std::uint8_t, kNonceBytes>;

// Alice -> Bob transcript: <s1, s3, u, z, H_check>.
struct Message {
  FieldElem s1;
  FieldElem s3;
  std::uint32_t u = 0;
  Nonce z{};
  Digest h_check{};

  friend bool operator==(const Message&, const Message&) = default;
};

using WireBytes = std::array<std::uint8_t, kMessageBytes>;

// s1 (32 B, big-endian) || s3 (32 B) || u (4 B) || z (32 B) || H_check (32 B).
WireBytes serialize(const Message& msg);

// Throws Errc::BadLength unless exactly kMessageBytes, and Errc::FieldOverflow
// if s1 or s3 is not a canonical residue mod M.
Message deserialize(ByteView bytes, const Modulus& m);

}  // namespace ibc
