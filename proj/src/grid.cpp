#include "ibc/grid.hpp"

#include "ibc/error.hpp"

namespace ibc {

EvalPoint EvalPoint::make(const BigInt& n, const BigInt& K, const Modulus& m) {
  if (K < 1) throw Error(Errc::InvalidArgument, "grid denominator must be positive");
  FieldElem k_inv = modmath::mod_inv(m.elem(K), m);
  return EvalPoint{n, K, m.mul(m.elem(n), k_inv)};
}

EvalPoint EvalPoint::from_parts(const BigInt& B, const BigInt& i, const BigInt& K, const Modulus& m) {
  if (K < 1) throw Error(Errc::InvalidArgument, "grid denominator must be positive");
  return EvalPoint{B * K + i, K, modmath::reduce_rational(B, i, K, m)};
}

EvalPoint EvalPoint::shifted(const BigInt& delta, const Modulus& m) const {
  return EvalPoint{numerator + delta * denominator, denominator, m.add(image, m.elem(delta))};
}

BigInt EvalPoint::floor() const { return floor_div(numerator, denominator); }

BigInt EvalPoint::frac_numerator() const { return euclid_mod(numerator, denominator); }

}  // namespace ibc
