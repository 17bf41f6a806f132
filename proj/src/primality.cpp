#include <random>

#include "ibc/modmath.hpp"

namespace ibc {

namespace {

constexpr unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt acc = 1;
  BigInt b = base % mod;
  BigInt e = exp;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) acc = (acc * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return acc;
}

bool trial_division(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

bool is_probable_prime(const BigInt& n, int rounds) {
  if (n < (BigInt(1) << 16)) return trial_division(n.convert_to<unsigned long>());
  for (unsigned sp : kSmallPrimes) {
    if (n % sp == 0) return false;
  }

  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }

  // Bases in [2, n-2]; fixed seed so a given n always gets the same verdict.
  std::mt19937_64 gen(0x1bc0ffeeULL);
  const std::size_t limbs = boost::multiprecision::msb(n) / 64 + 2;
  for (int round = 0; round < rounds; ++round) {
    BigInt a = 0;
    for (std::size_t k = 0; k < limbs; ++k) a = (a << 64) | gen();
    a = a % (n - 3) + 2;

    BigInt x = powm(a, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace ibc
