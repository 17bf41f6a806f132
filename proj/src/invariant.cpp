#include "ibc/invariant.hpp"

#include "ibc/error.hpp"

namespace ibc::invariant {

namespace {

FieldElem shift(const FieldElem& t, const BigInt& delta, const Modulus& m) { return m.add(t, m.elem(delta)); }

}  // namespace

InvariantTuple evaluate_tuple(const Session& sess, const BigInt& u, const BigInt& v) {
  const Modulus& m = sess.mod;
  const Offsets off = Offsets::of(u, v);
  const auto lower = sess.lower();
  const auto upper = sess.upper();
  InvariantTuple tu;
  tu.s0 = genfunc::evaluate(lower, sess.t);
  tu.s1 = genfunc::evaluate(lower, sess.t.shifted(off.d1, m));
  tu.s2 = genfunc::evaluate(upper, sess.t.shifted(off.d2, m));
  tu.s3 = genfunc::evaluate(upper, sess.t.shifted(off.d3, m));
  tu.t = sess.t;
  tu.u = u;
  tu.v = v;
  return tu;
}

namespace {

struct Ratio {
  FieldElem num, den;
};

Ratio ratio_parts(const InvariantTuple& tu, const Modulus& m) {
  const Offsets off = Offsets::of(tu.u, tu.v);
  const FieldElem& t = tu.t.image;
  return {m.add(m.mul(tu.s0, t), m.mul(tu.s1, shift(t, off.d1, m))),
          m.add(m.mul(tu.s2, shift(t, off.d2, m)), m.mul(tu.s3, shift(t, off.d3, m)))};
}

}  // namespace

bool cross_multiplied_holds(const InvariantTuple& tu, const FieldElem& p, const Modulus& m) {
  const auto [num, den] = ratio_parts(tu, m);
  return m.mul(num, modmath::mod_pow(p, 2 * tu.u, m)) == den;
}

FieldElem eval_invariant(const InvariantTuple& tu, const Modulus& m) {
  const auto [num, den] = ratio_parts(tu, m);
  if (boost::multiprecision::gcd(den.value(), m.value()) != 1) {
    throw Error(Errc::SingularDenominator, "invariant denominator is not invertible");
  }
  return m.div(num, den);
}

FieldElem expected_constant(const FieldElem& p, const BigInt& u, const Modulus& m) {
  return modmath::mod_inv(modmath::mod_pow(p, 2 * u, m), m);
}

namespace {

FieldElem recovery_divisor(const FieldElem& s1, const FieldElem& s3, const FieldElem& p_2u, const Modulus& m) {
  return m.mul(m.elem(2), m.sub(m.mul(s1, p_2u), s3));
}

}  // namespace

FieldElem recover_v(const FieldElem& s0, const FieldElem& s1, const FieldElem& s2, const FieldElem& s3,
                    const FieldElem& t_image, const BigInt& u, const FieldElem& p, const Modulus& m) {
  const FieldElem p_2u = modmath::mod_pow(p, 2 * u, m);
  const FieldElem divisor = recovery_divisor(s1, s3, p_2u, m);
  if (boost::multiprecision::gcd(divisor.value(), m.value()) != 1) {
    throw Error(Errc::SingularDenominator, "recovery divisor 2(s1 p^2u - s3) is not invertible");
  }
  const FieldElem& t = t_image;
  FieldElem acc = m.neg(m.mul(m.mul(s0, p_2u), t));
  acc = m.sub(acc, m.mul(m.mul(s1, p_2u), shift(t, 1, m)));
  acc = m.add(acc, m.mul(s2, shift(t, 2 * u, m)));
  acc = m.add(acc, m.mul(s3, shift(t, 2 * u + 1, m)));
  return m.div(acc, divisor);
}

bool check_denominator(const FieldElem& s1, const FieldElem& s3, const FieldElem& p, const BigInt& u,
                       const Modulus& m) {
  const FieldElem divisor = recovery_divisor(s1, s3, modmath::mod_pow(p, 2 * u, m), m);
  return boost::multiprecision::gcd(divisor.value(), m.value()) == 1;
}

std::vector<FiberPair> enumerate_fiber(const Session& sess, const BigInt& u, const std::vector<BigInt>& v_list) {
  std::vector<FiberPair> out;
  out.reserve(v_list.size());
  const auto lower = sess.lower();
  const auto upper = sess.upper();
  for (const auto& v : v_list) {
    const Offsets off = Offsets::of(u, v);
    out.push_back({genfunc::evaluate(lower, sess.t.shifted(off.d1, sess.mod)),
                   genfunc::evaluate(upper, sess.t.shifted(off.d3, sess.mod))});
  }
  return out;
}

}  // namespace ibc::invariant
