#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ibc {

using BigInt = boost::multiprecision::cpp_int;
using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

// Unsigned big-endian conversions.
BigInt from_be_bytes(ByteView bytes);
// Left-pads to `width`; throws Errc::OutOfRange if the value does not fit.
Bytes to_be_bytes(const BigInt& value, std::size_t width);
// Minimal big-endian magnitude (empty for zero).
Bytes to_be_bytes_minimal(const BigInt& value);
std::size_t byte_length(const BigInt& value);

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

// Concatenation helper for hash inputs.
class ByteWriter {
 public:
  ByteWriter& put(std::string_view ascii);
  ByteWriter& put(ByteView bytes);
  ByteWriter& put_u8(std::uint8_t value);
  ByteWriter& put_u32(std::uint32_t value);
  ByteWriter& put_u64(std::uint64_t value);
  ByteWriter& put_fixed(const BigInt& value, std::size_t width);
  // u32 length prefix followed by the minimal big-endian magnitude.
  ByteWriter& put_prefixed(const BigInt& value);

  const Bytes& bytes() const noexcept { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Euclidean division helpers: remainder always in [0, |d|).
BigInt floor_div(const BigInt& n, const BigInt& d);
BigInt euclid_mod(const BigInt& n, const BigInt& d);

}  // namespace ibc
