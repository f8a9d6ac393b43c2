#pragma once

#include <cstdint>

#include "eulermod/exactmath/rational.hpp"

namespace eulermod {

/// floor(a / b), rounding toward negative infinity.  b must be positive.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
BigInt floor_div(const BigInt& a, const BigInt& b);

/// p-adic valuation v_p(x) = v_p(numerator) - v_p(denominator).
/// Zero has infinite valuation and is rejected with DomainError.
long v_adic(const Rational& x, unsigned long p);
long v_adic(const BigInt& x, unsigned long p);

/// Least nonnegative residue of x modulo m.
std::uint64_t mod_reduce(std::int64_t x, std::uint64_t m);
std::uint64_t mod_reduce(const BigInt& x, std::uint64_t m);

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// base^exponent mod m by square-and-multiply, result in [0, m).
/// When multiplications is non-null it is incremented once per modular product.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exponent, std::uint64_t modulus,
                      std::uint64_t* multiplications = nullptr);

/// y in [0, m) with x*y = 1 mod m.  Throws NotInvertibleError.
std::uint64_t mod_inverse(std::int64_t x, std::uint64_t modulus);

/// Least d >= 1 with x^d = 1 mod m.  Throws NotInvertibleError.
std::uint64_t multiplicative_order(std::int64_t x, std::uint64_t modulus);

std::uint64_t euler_phi(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// (-1)^sign_exponent * 5^power_exponent = x (mod 2^modulus_exponent).
struct OddResidueDecomposition {
  int sign_exponent = 0;
  std::uint64_t power_exponent = 0;
  int modulus_exponent = 3;

  friend bool operator==(const OddResidueDecomposition&, const OddResidueDecomposition&) = default;
};

/// Writes an odd x as +-5^b modulo 2^t, 3 <= t <= 62, 0 <= b < 2^(t-2).
///
/// For t <= 24 the exponent is found by scanning powers of 5.  Larger t use
/// bitwise lifting of the discrete logarithm in the cyclic group <5>.
OddResidueDecomposition decompose_odd_residue(std::int64_t x, int t);

/// Bitwise-lifting route of decompose_odd_residue, exposed for cross-checking.
OddResidueDecomposition decompose_odd_residue_lifting(std::int64_t x, int t);

}  // namespace eulermod
