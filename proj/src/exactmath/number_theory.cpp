#include "eulermod/exactmath/number_theory.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "eulermod/errors.hpp"

namespace eulermod {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw DomainError("floor_div: divisor must be positive, got " + std::to_string(b));
  std::int64_t q = a / b;
  if ((a % b) < 0) --q;
  return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw DomainError("floor_div: divisor must be positive, got " + b.get_str());
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

long v_adic(const BigInt& x, unsigned long p) {
  if (x == 0) throw DomainError("v_adic: valuation of zero is infinite");
  if (p < 2) throw DomainError("v_adic: p must be a prime");
  if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
  BigInt rest(x);
  long v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long v_adic(const Rational& x, unsigned long p) {
  if (x.is_zero()) throw DomainError("v_adic: valuation of zero is infinite");
  return v_adic(x.numerator(), p) - v_adic(x.denominator(), p);
}

std::uint64_t mod_reduce(std::int64_t x, std::uint64_t m) {
  if (m == 0) throw DomainError("mod_reduce: zero modulus");
  if (x >= 0) return static_cast<std::uint64_t>(x) % m;
  // |x| computed in unsigned arithmetic so INT64_MIN is safe
  const std::uint64_t r = (std::uint64_t{0} - static_cast<std::uint64_t>(x)) % m;
  return r == 0 ? 0 : m - r;
}

std::uint64_t mod_reduce(const BigInt& x, std::uint64_t m) {
  if (m == 0) throw DomainError("mod_reduce: zero modulus");
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exponent, std::uint64_t modulus,
                      std::uint64_t* multiplications) {
  if (modulus < 2) throw DomainError("mod_pow: modulus must be >= 2");
  std::uint64_t result = 1;
  std::uint64_t b = mod_reduce(base, modulus);
  std::uint64_t count = 0;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) {
      result = mod_mul(result, b, modulus);
      ++count;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      b = mod_mul(b, b, modulus);
      ++count;
    }
  }
  if (multiplications != nullptr) *multiplications += count;
  return result;
}

std::uint64_t mod_inverse(std::int64_t x, std::uint64_t modulus) {
  if (modulus < 2) throw DomainError("mod_inverse: modulus must be >= 2");
  // extended Euclid on (x mod m, m) in signed 128-bit
  __int128 old_r = mod_reduce(x, modulus), r = modulus;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotInvertibleError("mod_inverse: " + std::to_string(x) + " is not invertible mod " +
                             std::to_string(modulus));
  }
  __int128 y = old_s % static_cast<__int128>(modulus);
  if (y < 0) y += modulus;
  return static_cast<std::uint64_t>(y);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto p : prime_factors(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t multiplicative_order(std::int64_t x, std::uint64_t modulus) {
  if (modulus < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
  if (std::gcd(mod_reduce(x, modulus), modulus) != 1) {
    throw NotInvertibleError("multiplicative_order: gcd(" + std::to_string(x) + ", " +
                             std::to_string(modulus) + ") != 1");
  }
  // the order divides phi(m); strip prime factors while the power stays 1
  std::uint64_t d = euler_phi(modulus);
  for (const auto p : prime_factors(d)) {
    while (d % p == 0 && mod_pow(x, d / p, modulus) == 1) d /= p;
  }
  return d;
}

namespace {

void check_decompose_args(std::int64_t x, int t) {
  if ((x & 1) == 0) throw DomainError("decompose_odd_residue: x must be odd, got " + std::to_string(x));
  if (t < 3 || t > 62) throw DomainError("decompose_odd_residue: t must lie in [3, 62]");
}

}  // namespace

OddResidueDecomposition decompose_odd_residue_lifting(std::int64_t x, int t) {
  check_decompose_args(x, t);
  const std::uint64_t mod = std::uint64_t{1} << t;
  const std::uint64_t r = mod_reduce(x, mod);
  OddResidueDecomposition out;
  out.modulus_exponent = t;
  // residues = 1 mod 4 form the cyclic group <5> of order 2^(t-2)
  std::uint64_t target = r;
  if (r % 4 == 3) {
    out.sign_exponent = 1;
    target = mod - r;
  }
  const std::uint64_t five_inv = mod_inverse(5, mod);
  const int bits = t - 2;
  std::uint64_t b = 0;
  std::uint64_t residual = target;  // target * 5^-b
  for (int i = 0; i < bits; ++i) {
    const std::uint64_t probe = mod_pow(static_cast<std::int64_t>(residual),
                                        std::uint64_t{1} << (bits - 1 - i), mod);
    if (probe != 1) {
      b |= std::uint64_t{1} << i;
      residual = mod_mul(residual, mod_pow(static_cast<std::int64_t>(five_inv), std::uint64_t{1} << i, mod), mod);
    }
  }
  if (residual != 1) throw InternalInconsistency("decompose_odd_residue: lifting did not converge");
  out.power_exponent = b;
  return out;
}

OddResidueDecomposition decompose_odd_residue(std::int64_t x, int t) {
  check_decompose_args(x, t);
  if (t > 24) return decompose_odd_residue_lifting(x, t);
  const std::uint64_t mod = std::uint64_t{1} << t;
  const std::uint64_t r = mod_reduce(x, mod);
  const std::uint64_t neg = mod - r;
  const std::uint64_t order = mod >> 2U;
  std::uint64_t power = 1;
  for (std::uint64_t b = 0; b < order; ++b) {
    if (power == r) return {0, b, t};
    if (power == neg) return {1, b, t};
    power = power * 5 % mod;
  }
  throw InternalInconsistency("decompose_odd_residue: no exponent found for " + std::to_string(x));
}

}  // namespace eulermod
