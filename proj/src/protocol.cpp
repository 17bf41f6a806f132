#include "ibc/protocol.hpp"

#include <openssl/crypto.h>

#include "ibc/error.hpp"
#include "ibc/hash.hpp"
#include "ibc/invariant.hpp"

namespace ibc::protocol {

namespace {

BigInt tagged(std::string_view tag, ByteView S, ByteView z) {
  return hash::sha3_256_int(ByteWriter().put(tag).put(S).put(z).bytes());
}

}  // namespace

Session derive_session(ByteView S, ByteView z, const Profile& profile) {
  if (S.size() < profile.min_secret_bytes) {
    throw Error(Errc::InvalidArgument, "secret shorter than " + std::to_string(profile.min_secret_bytes) + " bytes");
  }
  if (z.size() < profile.min_nonce_bytes) {
    throw Error(Errc::InvalidArgument, "nonce shorter than " + std::to_string(profile.min_nonce_bytes) + " bytes");
  }
  const Modulus& m = profile.modulus;
  const BigInt& M = m.value();

  const FieldElem p = m.elem(tagged("IBC.p", S, z) % (M - 2) + 2);
  const BigInt K = tagged("IBC.K", S, z) % (profile.K_max - profile.K_min + 1) + profile.K_min;
  const BigInt C = tagged("IBC.C", S, z) % (profile.C_max - profile.C_min + 1) + profile.C_min;
  const BigInt i = tagged("IBC.t", S, z) % K;
  if (i == 0) throw Error(Errc::AbortZeroIndex, "fractional index i is 0");
  const FieldElem B = m.elem(tagged("IBC.B", S, z));

  if (boost::multiprecision::gcd(K, M) != 1) {
    throw Error(Errc::AbortSingular, "grid denominator K shares a factor with M");
  }
  EvalPoint t = EvalPoint::from_parts(B.value(), i, K, m);
  if (t.image.is_zero()) throw Error(Errc::AbortSingular, "t reduces to 0 mod M");

  std::array<FieldElem, 4> q;
  for (std::uint8_t k = 1; k <= 4; ++k) {
    q[k - 1] = m.elem(hash::sha3_256_int(ByteWriter().put("IBC.q").put(S).put(z).put_u8(k).bytes()));
  }

  auto phi = osc::generate(S, z, osc::Tag::Phi, K, C, m, profile.oscillator_mode);
  auto psi = osc::generate(S, z, osc::Tag::Psi, K, C, m, profile.oscillator_mode);
  genfunc::ExpConvention conv = genfunc::PrfMasked{ByteWriter().put("IBC.prf").put(S).put(z).take()};

  return Session{Bytes(S.begin(), S.end()),
                 Bytes(z.begin(), z.end()),
                 m,
                 p,
                 B,
                 K,
                 C,
                 i,
                 std::move(t),
                 q,
                 std::move(phi),
                 std::move(psi),
                 std::move(conv),
                 profile.u_bits,
                 profile.v_bits};
}

Digest check_hash(ByteView S, std::uint64_t v, const FieldElem& s1, const FieldElem& s3, std::uint32_t u,
                  ByteView z) {
  ByteWriter w;
  w.put("IBC.check")
      .put(S)
      .put_u64(v)
      .put_fixed(s1.value(), kFieldBytes)
      .put_fixed(s3.value(), kFieldBytes)
      .put_u32(u)
      .put(z);
  return hash::sha3_256(w.bytes());
}

Message alice_generate(const Session& sess, std::uint32_t u, std::uint64_t v) {
  if (u == 0 || BigInt(u) >= (BigInt(1) << sess.u_bits)) {
    throw Error(Errc::OutOfRange, "u must be in [1, 2^" + std::to_string(sess.u_bits) + ")");
  }
  if (BigInt(v) >= (BigInt(1) << sess.v_bits) || BigInt(v) >= sess.mod.value()) {
    throw Error(Errc::OutOfRange, "v must be below 2^" + std::to_string(sess.v_bits) + " and below M");
  }
  if (sess.z.size() != kNonceBytes) {
    throw Error(Errc::InvalidArgument, "wire format carries a " + std::to_string(kNonceBytes) + "-byte nonce");
  }

  invariant::InvariantTuple tu;
  try {
    tu = invariant::evaluate_tuple(sess, u, v);
  } catch (const Error& e) {
    if (e.code() == Errc::SingularPoint) throw Error(Errc::AbortSingular, e.what());
    throw;
  }
  if (!invariant::check_denominator(tu.s1, tu.s3, sess.p, u, sess.mod)) {
    throw Error(Errc::AbortNonInvertible, "recovery divisor 2(s1 p^2u - s3) vanishes; redraw v");
  }

  Message msg;
  msg.s1 = tu.s1;
  msg.s3 = tu.s3;
  msg.u = u;
  std::copy(sess.z.begin(), sess.z.end(), msg.z.begin());
  msg.h_check = check_hash(sess.S, v, tu.s1, tu.s3, u, sess.z);
  return msg;
}

std::uint64_t bob_verify(ByteView S, const Message& msg, const Profile& profile) {
  if (msg.u == 0 || BigInt(msg.u) >= profile.u_limit()) {
    throw Error(Errc::RejectRange, "u outside [1, 2^" + std::to_string(profile.u_bits) + ")");
  }
  const Session sess = derive_session(S, msg.z, profile);
  const Modulus& m = sess.mod;
  const BigInt u = msg.u;
  const auto off = invariant::Offsets::of(u, 0);

  FieldElem s0, s2;
  try {
    s0 = genfunc::evaluate(sess.lower(), sess.t);
    s2 = genfunc::evaluate(sess.upper(), sess.t.shifted(off.d2, m));
  } catch (const Error& e) {
    if (e.code() == Errc::SingularPoint) throw Error(Errc::AbortSingular, e.what());
    throw;
  }

  if (!invariant::check_denominator(msg.s1, msg.s3, sess.p, u, m)) {
    throw Error(Errc::RejectDenominator, "recovery divisor is not invertible");
  }
  const FieldElem v_star = invariant::recover_v(s0, msg.s1, s2, msg.s3, sess.t.image, u, sess.p, m);

  // A tag only ever commits to an 8-byte v.
  if (v_star.value() > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::RejectHash, "recovered v has no 8-byte encoding");
  }
  const auto v = v_star.value().convert_to<std::uint64_t>();
  const Digest expected = check_hash(S, v, msg.s1, msg.s3, msg.u, msg.z);
  if (CRYPTO_memcmp(expected.data(), msg.h_check.data(), expected.size()) != 0) {
    throw Error(Errc::RejectHash, "integrity tag mismatch");
  }
  if (BigInt(v) >= profile.v_limit()) {
    throw Error(Errc::RejectRange, "recovered v exceeds 2^" + std::to_string(profile.v_bits));
  }
  return v;
}

}  // namespace ibc::protocol
