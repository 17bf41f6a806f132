#pragma once

#include "ibc/modmath.hpp"

namespace ibc {

// Grid point t = numerator / denominator kept exactly, together with its
// image in Z_M. The exact form drives oscillator indexing and the integer /
// fractional split of p^t; the image drives all field arithmetic.
struct EvalPoint {
  BigInt numerator;
  BigInt denominator;
  FieldElem image;

  // t = n / K. Throws Errc::NonInvertible when gcd(K, M) != 1.
  static EvalPoint make(const BigInt& n, const BigInt& K, const Modulus& m);
  // t = B + i/K, image via reduce_rational.
  static EvalPoint from_parts(const BigInt& B, const BigInt& i, const BigInt& K, const Modulus& m);

  // t + delta for an integer delta; stays on the same grid.
  EvalPoint shifted(const BigInt& delta, const Modulus& m) const;

  // Euclidean floor, so frac_numerator() is always in [0, K).
  BigInt floor() const;
  BigInt frac_numerator() const;

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

}  // namespace ibc
