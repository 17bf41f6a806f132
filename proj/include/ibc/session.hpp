#pragma once

#include <array>

#include "ibc/genfunc.hpp"

namespace ibc {

// Everything both parties derive from (S, z) under one profile.
struct Session {
  Bytes S;
  Bytes z;
  Modulus mod;
  FieldElem p;
  FieldElem B;
  BigInt K;
  BigInt C;
  BigInt i;       // fractional numerator, in [1, K)
  EvalPoint t;    // B + i/K
  std::array<FieldElem, 4> q;
  osc::Oscillator phi;
  osc::Oscillator psi;
  genfunc::ExpConvention conv;
  unsigned u_bits = 16;
  unsigned v_bits = 16;

  // Amplitudes (q1, q2) drive s0 and s1; (q3, q4) drive s2 and s3.
  genfunc::GenParams lower() const { return {p, q[0], q[1], phi, psi, conv, mod}; }
  genfunc::GenParams upper() const { return {p, q[2], q[3], phi, psi, conv, mod}; }
};

}  // namespace ibc
