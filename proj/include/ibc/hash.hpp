#pragma once

#include "ibc/bytes.hpp"

namespace ibc::hash {

Digest sha3_256(ByteView data);
Bytes shake256(ByteView data, std::size_t out_len);

// Digest read as a big-endian unsigned integer.
BigInt sha3_256_int(ByteView data);

}  // namespace ibc::hash
