#include "ibc/genfunc.hpp"

#include "ibc/error.hpp"
#include "ibc/hash.hpp"

namespace ibc::genfunc {

using modmath::mod_pow_signed;

ExpConvention make_root_based(const FieldElem& p, const BigInt& K, const Modulus& m) {
  auto root = modmath::kth_root(p, K, m);
  if (!root.found()) {
    throw Error(Errc::MissingRoot, "no " + K.str() + "-th root of " + p.value().str() + " mod " +
                                       m.value().str());
  }
  return RootBased{*root.root};
}

ExpConvention make_relative(const FieldElem& anchor, const Modulus& m) {
  if (anchor.is_zero()) throw Error(Errc::NonInvertible, "relative-scale anchor must be nonzero");
  (void)m;
  return RelativeScale{anchor};
}

FieldElem prf_mask(ByteView key, const BigInt& i, const BigInt& K, const Modulus& m) {
  Bytes input = ByteWriter().put(key).put_prefixed(i).put_prefixed(K).take();
  BigInt digest = hash::sha3_256_int(input);
  return m.elem(digest % (m.value() - 1) + 1);
}

FieldElem masked_power(const FieldElem& p, const EvalPoint& t, const FieldElem& mask, const Modulus& m) {
  return m.mul(mod_pow_signed(p, t.floor(), m), mask);
}

FieldElem exp_at(const ExpConvention& conv, const FieldElem& p, const EvalPoint& t, const Modulus& m) {
  if (const auto* rb = std::get_if<RootBased>(&conv)) return mod_pow_signed(rb->root, t.numerator, m);
  if (const auto* rs = std::get_if<RelativeScale>(&conv)) return masked_power(p, t, rs->anchor, m);
  const auto& pm = std::get<PrfMasked>(conv);
  return masked_power(p, t, prf_mask(pm.key, t.frac_numerator(), t.denominator, m), m);
}

FieldElem assemble(const FieldElem& exp, const FieldElem& q_i, const FieldElem& phi, const FieldElem& q_j,
                   const FieldElem& psi, const FieldElem& t_image, const Modulus& m) {
  if (t_image.is_zero()) throw Error(Errc::SingularPoint, "evaluation point reduces to 0 mod M");
  FieldElem numerator = m.add(exp, m.add(m.mul(q_i, phi), m.mul(q_j, psi)));
  return m.mul(numerator, m.inv(t_image));
}

FieldElem evaluate(const GenParams& gp, const EvalPoint& t) {
  const Modulus& m = gp.mod;
  if (t.image.is_zero()) throw Error(Errc::SingularPoint, "evaluation point reduces to 0 mod M");
  return assemble(exp_at(gp.conv, gp.p, t, m), gp.q_i, osc::eval_at(gp.phi, t), gp.q_j,
                  osc::eval_at(gp.psi, t), t.image, m);
}

FieldElem salt_generator(const FieldElem& salt_image, const FieldElem& p, const BigInt& i, const Modulus& m) {
  if (salt_image.is_zero()) throw Error(Errc::NonInvertible, "salt hashes to 0 mod M");
  if (i < 0) throw Error(Errc::InvalidArgument, "salt offset must be nonnegative");
  return m.mul(salt_image, modmath::mod_pow(p, i, m));
}

FieldElem salt_image(ByteView salt, const Modulus& m) { return m.elem(hash::sha3_256_int(salt)); }

}  // namespace ibc::genfunc
