#pragma once

#include <variant>

#include "ibc/oscillator.hpp"

namespace ibc::genfunc {

// p^(n/K) := r^n for a K-th root r of p.
struct RootBased {
  FieldElem root;
};

// p^t := A * p^floor(t) for a fixed invertible anchor A.
struct RelativeScale {
  FieldElem anchor;
};

// p^t := p^floor(t) * PRF(i, K), i the fractional numerator of t.
struct PrfMasked {
  Bytes key;
};

using ExpConvention = std::variant<RootBased, RelativeScale, PrfMasked>;

// Throws Errc::MissingRoot when p has no K-th root (or none could be found).
ExpConvention make_root_based(const FieldElem& p, const BigInt& K, const Modulus& m);
// Throws Errc::NonInvertible for a zero anchor.
ExpConvention make_relative(const FieldElem& anchor, const Modulus& m);

// (SHA3-256(key || i || K) mod (M-1)) + 1; never zero, so always invertible.
FieldElem prf_mask(ByteView key, const BigInt& i, const BigInt& K, const Modulus& m);

// p^floor(t) * mask.
FieldElem masked_power(const FieldElem& p, const EvalPoint& t, const FieldElem& mask, const Modulus& m);

// In every convention exp_at(t + d) == exp_at(t) * p^d for integer d.
FieldElem exp_at(const ExpConvention& conv, const FieldElem& p, const EvalPoint& t, const Modulus& m);

struct GenParams {
  FieldElem p;
  FieldElem q_i;
  FieldElem q_j;
  osc::Oscillator phi;
  osc::Oscillator psi;
  ExpConvention conv;
  Modulus mod;
};

// (exp + q_i*phi + q_j*psi) / t_image. Throws Errc::SingularPoint for t_image == 0.
FieldElem assemble(const FieldElem& exp, const FieldElem& q_i, const FieldElem& phi, const FieldElem& q_j,
                   const FieldElem& psi, const FieldElem& t_image, const Modulus& m);

// s_M(t) = (p^t + q_i*phi(Ct) + q_j*psi(Ct)) / t mod M.
FieldElem evaluate(const GenParams& gp, const EvalPoint& t);

// H(s) * p^i. Throws Errc::NonInvertible if the salt image is zero.
FieldElem salt_generator(const FieldElem& salt_image, const FieldElem& p, const BigInt& i, const Modulus& m);
// SHA3-256(salt) mod M.
FieldElem salt_image(ByteView salt, const Modulus& m);

}  // namespace ibc::genfunc
