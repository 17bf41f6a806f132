#include "ibc/wire.hpp"

#include <algorithm>

#include "ibc/error.hpp"

namespace ibc {

WireBytes serialize(const Message& msg) {
  WireBytes out{};
  ByteWriter w;
  w.put_fixed(msg.s1.value(), kFieldBytes)
      .put_fixed(msg.s3.value(), kFieldBytes)
      .put_u32(msg.u)
      .put(msg.z)
      .put(msg.h_check);
  std::copy(w.bytes().begin(), w.bytes().end(), out.begin());
  return out;
}

Message deserialize(ByteView bytes, const Modulus& m) {
  if (bytes.size() != kMessageBytes) {
    throw Error(Errc::BadLength, "message is " + std::to_string(bytes.size()) + " bytes, expected " +
                                     std::to_string(kMessageBytes));
  }
  Message msg;
  msg.s1 = m.from_canonical(from_be_bytes(bytes.subspan(0, kFieldBytes)));
  msg.s3 = m.from_canonical(from_be_bytes(bytes.subspan(kFieldBytes, kFieldBytes)));
  auto u_bytes = bytes.subspan(2 * kFieldBytes, 4);
  msg.u = (std::uint32_t{u_bytes[0]} << 24) | (std::uint32_t{u_bytes[1]} << 16) |
          (std::uint32_t{u_bytes[2]} << 8) | std::uint32_t{u_bytes[3]};
  auto z = bytes.subspan(2 * kFieldBytes + 4, kNonceBytes);
  std::copy(z.begin(), z.end(), msg.z.begin());
  auto h = bytes.subspan(2 * kFieldBytes + 4 + kNonceBytes, 32);
  std::copy(h.begin(), h.end(), msg.h_check.begin());
  return msg;
}

}  // namespace ibc
