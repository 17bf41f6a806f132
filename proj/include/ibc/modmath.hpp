#pragma once

#include <optional>

#include "ibc/bytes.hpp"

namespace ibc {

// Canonical residue in [0, M). Only a Modulus can mint one, so every
// FieldElem in circulation is already reduced.
class FieldElem {
 public:
  FieldElem() = default;

  const BigInt& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  friend class Modulus;
  explicit FieldElem(BigInt v) : value_(std::move(v)) {}

  BigInt value_;
};

class Modulus {
 public:
  // Requires M >= 3. `is_prime` is a caller assertion; use Modulus::prime to
  // have it checked.
  explicit Modulus(BigInt m, bool is_prime = false);

  // Verifies primality: trial division below 2^16, Miller-Rabin (64 rounds)
  // above. Throws Errc::InvalidArgument on a composite.
  static Modulus prime(BigInt m);

  const BigInt& value() const noexcept { return m_; }
  bool is_prime() const noexcept { return prime_; }
  // Bytes needed for the largest residue M-1.
  std::size_t byte_width() const noexcept { return width_; }

  FieldElem elem(const BigInt& x) const;  // Euclidean reduction
  FieldElem elem(long long x) const { return elem(BigInt(x)); }
  // Rejects (Errc::FieldOverflow) instead of reducing.
  FieldElem from_canonical(BigInt x) const;

  FieldElem zero() const { return FieldElem(); }
  FieldElem one() const { return FieldElem(BigInt(1)); }

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
  FieldElem pow(const FieldElem& base, const BigInt& exp) const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.m_ == b.m_; }

 private:
  BigInt m_;
  bool prime_ = false;
  std::size_t width_ = 0;
};

namespace modmath {

// Extended Euclid. Throws Errc::NonInvertible when gcd(a, M) != 1.
FieldElem mod_inv(const FieldElem& a, const Modulus& m);
BigInt mod_inv(const BigInt& a, const BigInt& m);

// Left-to-right square-and-multiply; exp must be >= 0.
FieldElem mod_pow(const FieldElem& base, const BigInt& exp, const Modulus& m);
// Negative exponents go through the inverse.
FieldElem mod_pow_signed(const FieldElem& base, const BigInt& exp, const Modulus& m);

// Field image of the grid point B + i/K: ((B mod M)*K + i) * K^-1 mod M.
FieldElem reduce_rational(const BigInt& B, const BigInt& i, const BigInt& K, const Modulus& m);

enum class RootStatus { Found, Absent, Unknown };

struct KthRoot {
  RootStatus status = RootStatus::Unknown;
  std::optional<FieldElem> root;

  bool found() const noexcept { return status == RootStatus::Found; }
};

// r with r^K == p (mod M). Exhaustive search for M < 2^16, otherwise
// kth_root_algebraic. Throws Errc::Unsupported for a non-prime modulus.
KthRoot kth_root(const FieldElem& p, const BigInt& K, const Modulus& m);

// Residue test p^((M-1)/d) == 1 with d = gcd(K, M-1), then per-prime-factor
// extraction (Adleman-Manders-Miller) over the factors of K. Reports Unknown
// when K cannot be factored by trial division or the branch search is too wide.
KthRoot kth_root_algebraic(const FieldElem& p, const BigInt& K, const Modulus& m);

// Exhaustive scan over Z_M; only sensible for small M.
KthRoot kth_root_exhaustive(const FieldElem& p, const BigInt& K, const Modulus& m);

}  // namespace modmath

// Miller-Rabin with `rounds` pseudo-random bases (fixed seed, reproducible).
bool is_probable_prime(const BigInt& n, int rounds = 64);

}  // namespace ibc
