#pragma once

#include <vector>

#include "ibc/session.hpp"

namespace ibc::invariant {

// Evaluation offsets for spacing u and shift v:
// d1 = 2v+1, d2 = 2u, d3 = 2u+2v+1.
struct Offsets {
  BigInt d1, d2, d3;

  static Offsets of(const BigInt& u, const BigInt& v) {
    return {2 * v + 1, 2 * u, 2 * u + 2 * v + 1};
  }
};

struct InvariantTuple {
  FieldElem s0, s1, s2, s3;
  EvalPoint t;
  BigInt u;
  BigInt v;
};

// Honest tuple: s0, s1 with (q1, q2) at t, t+d1; s2, s3 with (q3, q4) at
// t+d2, t+d3. Propagates Errc::SingularPoint.
InvariantTuple evaluate_tuple(const Session& sess, const BigInt& u, const BigInt& v);

// (s0*t + s1*(t+d1)) / (s2*(t+d2) + s3*(t+d3)).
// Throws Errc::SingularDenominator if the denominator is not invertible.
FieldElem eval_invariant(const InvariantTuple& tu, const Modulus& m);

// num * p^(2u) == den, the identity without the division. Meaningful even
// when den vanishes (then num does too, about once per M sessions).
bool cross_multiplied_holds(const InvariantTuple& tu, const FieldElem& p, const Modulus& m);

// 1 / p^(2u).
FieldElem expected_constant(const FieldElem& p, const BigInt& u, const Modulus& m);

// Solves the cross-multiplied identity for v:
//   (-s0 p^2u t - s1 p^2u (t+1) + s2 (t+2u) + s3 (t+2u+1)) / (2 (s1 p^2u - s3)).
// Throws Errc::SingularDenominator when the divisor is not invertible.
FieldElem recover_v(const FieldElem& s0, const FieldElem& s1, const FieldElem& s2, const FieldElem& s3,
                    const FieldElem& t_image, const BigInt& u, const FieldElem& p, const Modulus& m);

// True iff gcd(2 (s1 p^2u - s3) mod M, M) == 1.
bool check_denominator(const FieldElem& s1, const FieldElem& s3, const FieldElem& p, const BigInt& u,
                       const Modulus& m);

struct FiberPair {
  FieldElem s1;
  FieldElem s3;
};

// (s1, s3) for each v in v_list at fixed spacing u; all share the invariant
// value 1/p^(2u) with the session's s0 and s2.
std::vector<FiberPair> enumerate_fiber(const Session& sess, const BigInt& u, const std::vector<BigInt>& v_list);

// Real-line reference: the four-point ratio of
//   s(t) = (p^t + q1 sin(r1 pi t) + q2 cos(r2 pi t)) / t
// at t, t+1, t+2, t+3. Equal to 1/p^2 when r1 and r2 are odd. Evaluated with
// 50 significant digits internally so that the oscillatory terms cancel even
// when they dwarf p^t. Throws Errc::DomainError for t in {0, -1, -2, -3} or
// p <= 0.
double analytic_invariant_check(double p, double q1, double q2, long r1, long r2, double t);

}  // namespace ibc::invariant
