#pragma once

#include "ibc/profile.hpp"
#include "ibc/session.hpp"
#include "ibc/wire.hpp"

namespace ibc::protocol {

// Derives p, K, C, i, B, t, q1..q4, both oscillators and the PRF mask key
// from (S, z), each under its own "IBC.*" domain tag:
//   p = H("IBC.p"||S||z) mod (M-2) + 2
//   K = H("IBC.K"||S||z) mod (K_max-K_min+1) + K_min   (C likewise, "IBC.C")
//   i = H("IBC.t"||S||z) mod K
//   B = H("IBC.B"||S||z) mod M
//   q_k = H("IBC.q"||S||z||k) mod M
// Throws Errc::AbortZeroIndex for i == 0, Errc::AbortSingular when t has no
// image in Z_M or the image is 0, Errc::InvalidArgument for short S or z.
Session derive_session(ByteView S, ByteView z, const Profile& profile);

// H("IBC.check" || S || v (8 B) || s1 (32 B) || s3 (32 B) || u (4 B) || z).
Digest check_hash(ByteView S, std::uint64_t v, const FieldElem& s1, const FieldElem& s3, std::uint32_t u,
                  ByteView z);

// Requires 1 <= u < 2^u_bits, v < min(2^v_bits, M) (Errc::OutOfRange) and a
// 32-byte nonce. Throws Errc::AbortSingular when an evaluation point hits 0
// and Errc::AbortNonInvertible when the recovery divisor vanishes; callers
// redraw v or z.
Message alice_generate(const Session& sess, std::uint32_t u, std::uint64_t v);

// Re-derives the session from (S, msg.z), recovers v and checks the tag.
// Throws Errc::RejectRange (u or v out of bounds), Errc::RejectDenominator,
// Errc::RejectHash; session-derivation aborts propagate unchanged.
std::uint64_t bob_verify(ByteView S, const Message& msg, const Profile& profile);

}  // namespace ibc::protocol
