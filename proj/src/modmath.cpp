#include "ibc/modmath.hpp"

#include <vector>

#include "ibc/error.hpp"

namespace ibc {

Modulus::Modulus(BigInt m, bool is_prime) : m_(std::move(m)), prime_(is_prime) {
  if (m_ < 3) throw Error(Errc::InvalidArgument, "modulus must be at least 3");
  width_ = byte_length(m_ - 1);
}

Modulus Modulus::prime(BigInt m) {
  if (m < 3 || !is_probable_prime(m)) {
    throw Error(Errc::InvalidArgument, "modulus " + m.str() + " is not an odd prime");
  }
  return Modulus(std::move(m), true);
}

FieldElem Modulus::elem(const BigInt& x) const { return FieldElem(euclid_mod(x, m_)); }

FieldElem Modulus::from_canonical(BigInt x) const {
  if (x < 0 || x >= m_) throw Error(Errc::FieldOverflow, "value " + x.str() + " not below modulus");
  return FieldElem(std::move(x));
}

FieldElem Modulus::add(const FieldElem& a, const FieldElem& b) const {
  BigInt r = a.value() + b.value();
  if (r >= m_) r -= m_;
  return FieldElem(std::move(r));
}

FieldElem Modulus::sub(const FieldElem& a, const FieldElem& b) const {
  BigInt r = a.value() - b.value();
  if (r < 0) r += m_;
  return FieldElem(std::move(r));
}

FieldElem Modulus::neg(const FieldElem& a) const {
  if (a.is_zero()) return a;
  return FieldElem(m_ - a.value());
}

FieldElem Modulus::mul(const FieldElem& a, const FieldElem& b) const {
  return FieldElem(BigInt((a.value() * b.value()) % m_));
}

FieldElem Modulus::inv(const FieldElem& a) const { return modmath::mod_inv(a, *this); }

FieldElem Modulus::pow(const FieldElem& base, const BigInt& exp) const {
  return modmath::mod_pow(base, exp, *this);
}

namespace modmath {

BigInt mod_inv(const BigInt& a, const BigInt& m) {
  BigInt r0 = m, r1 = euclid_mod(a, m);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    BigInt t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 != 1) {
    throw Error(Errc::NonInvertible, a.str() + " has no inverse mod " + m.str() + " (gcd " + r0.str() + ")");
  }
  return euclid_mod(t0, m);
}

FieldElem mod_inv(const FieldElem& a, const Modulus& m) { return m.elem(mod_inv(a.value(), m.value())); }

FieldElem mod_pow(const FieldElem& base, const BigInt& exp, const Modulus& m) {
  if (exp < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (exp == 0) return m.one();
  const BigInt& mod = m.value();
  const BigInt& b = base.value();
  BigInt acc = 1;
  for (auto bit = static_cast<long long>(boost::multiprecision::msb(exp)); bit >= 0; --bit) {
    acc = (acc * acc) % mod;
    if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(bit))) acc = (acc * b) % mod;
  }
  return m.elem(acc);
}

FieldElem mod_pow_signed(const FieldElem& base, const BigInt& exp, const Modulus& m) {
  if (exp >= 0) return mod_pow(base, exp, m);
  return mod_pow(mod_inv(base, m), -exp, m);
}

FieldElem reduce_rational(const BigInt& B, const BigInt& i, const BigInt& K, const Modulus& m) {
  const BigInt& mod = m.value();
  BigInt k_inv = mod_inv(K, mod);
  BigInt scaled = euclid_mod(B, mod) * euclid_mod(K, mod) + i;
  return m.elem(euclid_mod(scaled, mod) * k_inv);
}

namespace {

void require_prime(const FieldElem& p, const BigInt& K, const Modulus& m) {
  if (!m.is_prime()) throw Error(Errc::Unsupported, "k-th roots need a prime modulus");
  if (p.is_zero()) throw Error(Errc::NonInvertible, "k-th root of zero requested");
  if (K < 1) throw Error(Errc::InvalidArgument, "root degree must be positive");
}

// Trial division up to `bound`; the cofactor is kept if it is (probably) prime.
std::optional<std::vector<BigInt>> factor_small(BigInt n, unsigned long bound) {
  std::vector<BigInt> primes;
  for (unsigned long d = 2; d <= bound && BigInt(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      primes.emplace_back(d);
      n /= d;
    }
  }
  if (n > 1) {
    if (!is_probable_prime(n)) return std::nullopt;
    primes.push_back(n);
  }
  return primes;
}

struct SylowData {
  BigInt s;  // exponent of r in M-1
  BigInt t;  // cofactor, gcd(r, t) = 1
  FieldElem gen;   // generator of the r-Sylow subgroup
  FieldElem unity; // primitive r-th root of unity
};

SylowData sylow(const BigInt& r, const Modulus& m) {
  BigInt order = m.value() - 1;
  SylowData out;
  out.t = order;
  out.s = 0;
  while (out.t % r == 0) {
    out.t /= r;
    ++out.s;
  }
  // Smallest non r-th residue.
  for (BigInt g = 2;; ++g) {
    FieldElem ge = m.elem(g);
    if (mod_pow(ge, order / r, m) != m.one()) {
      out.gen = mod_pow(ge, out.t, m);
      break;
    }
  }
  BigInt r_pow = 1;
  for (BigInt k = 1; k < out.s; ++k) r_pow *= r;
  out.unity = mod_pow(out.gen, r_pow, m);
  return out;
}

constexpr unsigned long kMaxLinearSearch = 1ul << 20;

// One r-th root of an r-th residue a, with r prime and r | M-1.
std::optional<FieldElem> prime_root(const FieldElem& a, const BigInt& r, const SylowData& sy, const Modulus& m) {
  if (r > kMaxLinearSearch) return std::nullopt;
  BigInt alpha = sy.t == 1 ? BigInt(0) : mod_inv(r, sy.t);
  FieldElem b = mod_pow_signed(a, r * alpha - 1, m);

  // Pohlig-Hellman: discrete log of b to base gen in the group of order r^s.
  std::vector<BigInt> r_powers{1};
  for (BigInt k = 1; k < sy.s; ++k) r_powers.push_back(r_powers.back() * r);
  const auto s = static_cast<std::size_t>(sy.s);
  FieldElem gen_inv = m.inv(sy.gen);
  BigInt e = 0;
  for (std::size_t k = 0; k < s; ++k) {
    FieldElem h = m.mul(mod_pow(gen_inv, e, m), b);
    h = mod_pow(h, r_powers[s - 1 - k], m);
    FieldElem probe = m.one();
    bool hit = false;
    for (BigInt d = 0; d < r; ++d) {
      if (probe == h) {
        e += d * r_powers[k];
        hit = true;
        break;
      }
      probe = m.mul(probe, sy.unity);
    }
    if (!hit) return std::nullopt;
  }
  if (e % r != 0) return std::nullopt;
  FieldElem x = m.mul(mod_pow(a, alpha, m), mod_pow(gen_inv, e / r, m));
  if (mod_pow(x, r, m) != a) return std::nullopt;
  return x;
}

struct RootSearch {
  const Modulus& m;
  const std::vector<BigInt>& primes;
  std::size_t budget = 4096;
  bool exhausted = false;

  std::optional<FieldElem> dfs(const FieldElem& a, std::size_t idx) {
    if (idx == primes.size()) return a;
    if (budget == 0) {
      exhausted = true;
      return std::nullopt;
    }
    --budget;
    const BigInt& r = primes[idx];
    const BigInt order = m.value() - 1;
    if (order % r != 0) {
      // Unique root: r is invertible in the exponent group.
      return dfs(mod_pow(a, mod_inv(r, order), m), idx + 1);
    }
    if (mod_pow(a, order / r, m) != m.one()) return std::nullopt;
    SylowData sy = sylow(r, m);
    auto base = prime_root(a, r, sy, m);
    if (!base) {
      exhausted = true;
      return std::nullopt;
    }
    // Every r-th root is base * unity^j; a later factor may need any of them.
    FieldElem candidate = *base;
    for (BigInt j = 0; j < r; ++j) {
      if (auto found = dfs(candidate, idx + 1)) return found;
      if (exhausted) return std::nullopt;
      candidate = m.mul(candidate, sy.unity);
    }
    return std::nullopt;
  }
};

}  // namespace

KthRoot kth_root_exhaustive(const FieldElem& p, const BigInt& K, const Modulus& m) {
  require_prime(p, K, m);
  for (BigInt r = 1; r < m.value(); ++r) {
    FieldElem re = m.elem(r);
    if (mod_pow(re, K, m) == p) return {RootStatus::Found, re};
  }
  return {RootStatus::Absent, std::nullopt};
}

KthRoot kth_root_algebraic(const FieldElem& p, const BigInt& K, const Modulus& m) {
  require_prime(p, K, m);
  const BigInt order = m.value() - 1;
  const BigInt d = boost::multiprecision::gcd(K, order);
  if (mod_pow(p, order / d, m) != m.one()) return {RootStatus::Absent, std::nullopt};
  if (d == 1) return {RootStatus::Found, mod_pow(p, mod_inv(K, order), m)};

  auto primes = factor_small(K, 1ul << 20);
  if (!primes) return {RootStatus::Unknown, std::nullopt};
  RootSearch search{m, *primes};
  auto root = search.dfs(p, 0);
  if (root && mod_pow(*root, K, m) == p) return {RootStatus::Found, *root};
  // The residue test passed, so a root exists; failing to build one is a
  // limitation of the search, not absence.
  return {RootStatus::Unknown, std::nullopt};
}

KthRoot kth_root(const FieldElem& p, const BigInt& K, const Modulus& m) {
  require_prime(p, K, m);
  if (m.value() < (BigInt(1) << 16)) return kth_root_exhaustive(p, K, m);
  return kth_root_algebraic(p, K, m);
}

}  // namespace modmath
}  // namespace ibc
