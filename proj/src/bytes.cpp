#include "ibc/bytes.hpp"

#include <iterator>

#include "ibc/error.hpp"

namespace ibc {

BigInt from_be_bytes(ByteView bytes) {
  BigInt out;
  if (!bytes.empty()) {
    boost::multiprecision::import_bits(out, bytes.begin(), bytes.end(), 8, true);
  }
  return out;
}

Bytes to_be_bytes_minimal(const BigInt& value) {
  if (value < 0) throw Error(Errc::InvalidArgument, "negative value has no unsigned encoding");
  Bytes out;
  if (value == 0) return out;
  boost::multiprecision::export_bits(value, std::back_inserter(out), 8, true);
  return out;
}

Bytes to_be_bytes(const BigInt& value, std::size_t width) {
  Bytes minimal = to_be_bytes_minimal(value);
  if (minimal.size() > width) {
    throw Error(Errc::OutOfRange, "value needs " + std::to_string(minimal.size()) +
                                      " bytes, field is " + std::to_string(width));
  }
  Bytes out(width - minimal.size(), 0);
  out.insert(out.end(), minimal.begin(), minimal.end());
  return out;
}

std::size_t byte_length(const BigInt& value) {
  if (value == 0) return 0;
  return (boost::multiprecision::msb(value) / 8) + 1;
}

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::InvalidArgument, "odd-length hex string");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t k = 0; k < hex.size(); k += 2) {
    int hi = hex_value(hex[k]);
    int lo = hex_value(hex[k + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::InvalidArgument, "invalid hex digit");
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

ByteWriter& ByteWriter::put(std::string_view ascii) {
  buf_.insert(buf_.end(), ascii.begin(), ascii.end());
  return *this;
}

ByteWriter& ByteWriter::put(ByteView bytes) {
  buf_.insert(buf_.end(), bytes.begin(), bytes.end());
  return *this;
}

ByteWriter& ByteWriter::put_u8(std::uint8_t value) {
  buf_.push_back(value);
  return *this;
}

ByteWriter& ByteWriter::put_u32(std::uint32_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) buf_.push_back(static_cast<std::uint8_t>(value >> shift));
  return *this;
}

ByteWriter& ByteWriter::put_u64(std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8) buf_.push_back(static_cast<std::uint8_t>(value >> shift));
  return *this;
}

ByteWriter& ByteWriter::put_fixed(const BigInt& value, std::size_t width) {
  return put(to_be_bytes(value, width));
}

ByteWriter& ByteWriter::put_prefixed(const BigInt& value) {
  Bytes mag = to_be_bytes_minimal(value);
  put_u32(static_cast<std::uint32_t>(mag.size()));
  return put(mag);
}

BigInt euclid_mod(const BigInt& n, const BigInt& d) {
  BigInt r = n % d;
  if (r < 0) r += abs(d);
  return r;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  // cpp_int division truncates toward zero.
  BigInt q = n / d;
  BigInt r = n % d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

}  // namespace ibc
