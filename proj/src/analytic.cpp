#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ibc/error.hpp"
#include "ibc/invariant.hpp"

namespace ibc::invariant {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real generating(const Real& p, const Real& q1, const Real& q2, long r1, long r2, const Real& t) {
  const Real pi = boost::math::constants::pi<Real>();
  return (pow(p, t) + q1 * sin(r1 * pi * t) + q2 * cos(r2 * pi * t)) / t;
}

}  // namespace

double analytic_invariant_check(double p, double q1, double q2, long r1, long r2, double t) {
  if (!(p > 0)) throw Error(Errc::DomainError, "base p must be positive");
  for (int k = 0; k <= 3; ++k) {
    if (t + k == 0) throw Error(Errc::DomainError, "t + " + std::to_string(k) + " is zero");
  }
  const Real P(p), Q1(q1), Q2(q2), T(t);
  Real s[4];
  for (int k = 0; k < 4; ++k) s[k] = generating(P, Q1, Q2, r1, r2, T + k);
  Real num = s[0] * T + s[1] * (T + 1);
  Real den = s[2] * (T + 2) + s[3] * (T + 3);
  return static_cast<double>(num / den);
}

}  // namespace ibc::invariant
