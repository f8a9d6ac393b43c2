#include <string>

#include "eulermod/special.hpp"

namespace eulermod {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational power_of_two(std::size_t n) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
  return Rational(out);
}

}  // namespace

Polynomial euler_polynomial(std::size_t n) {
  auto& table = shared_euler_table();
  table.ensure(n);
  const Rational half(BigInt(1), BigInt(2));
  Polynomial out;
  for (std::size_t k = 0; k <= n; ++k) {
    const BigInt e = table.at(k);
    if (e == 0) continue;
    const Rational c = Rational(binomial(n, k)) * Rational(e) / power_of_two(k);
    out += Polynomial::shifted_power(-half, static_cast<int>(n - k)) * c;
  }
  return out;
}

Polynomial bernoulli_polynomial(std::size_t n) {
  auto& table = shared_bernoulli_table();
  table.ensure(n);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = Rational(binomial(n, k)) * table.at(k);
  return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> raabe_sides(std::size_t n, std::size_t m) {
  if (m == 0) throw DomainError("check_raabe: m must be positive");
  const Polynomial b = bernoulli_polynomial(n);
  const Rational inv_m(BigInt(1), BigInt(static_cast<unsigned long>(m)));
  Polynomial sum;
  for (std::size_t r = 0; r < m; ++r) {
    sum += b.compose_affine(inv_m, Rational(static_cast<long>(r)) * inv_m);
  }
  // m^(n-1), which is 1/m when n = 0
  const Rational factor = n == 0 ? inv_m : pow(Rational(static_cast<long>(m)), static_cast<unsigned long>(n - 1));
  return {sum * factor, b};
}

bool check_raabe(std::size_t n, std::size_t m) {
  const auto [lhs, rhs] = raabe_sides(n, m);
  return lhs == rhs;
}

std::array<Polynomial, 3> euler_bernoulli_relation_sides(std::size_t n) {
  const Rational half(BigInt(1), BigInt(2));
  const Polynomial b = bernoulli_polynomial(n + 1);
  const Rational two_pow = power_of_two(n + 1);
  return {euler_polynomial(n) * (Rational(static_cast<long>(n + 1)) * half),
          b - b.compose_affine(half, Rational(0)) * two_pow,
          b.compose_affine(half, half) * two_pow - b};
}

bool check_euler_bernoulli_relation(std::size_t n) {
  const auto sides = euler_bernoulli_relation_sides(n);
  return sides[0] == sides[1] && sides[0] == sides[2];
}

std::pair<Polynomial, Polynomial> reflection_sides(std::size_t n) {
  const Polynomial e = euler_polynomial(n);
  return {e + e.compose_affine(Rational(1), Rational(1)), Polynomial::monomial(Rational(2), static_cast<int>(n))};
}

bool check_reflection(std::size_t n) {
  const auto [lhs, rhs] = reflection_sides(n);
  return (lhs - rhs).is_zero();
}

std::vector<BigInt> secant_series_oracle(std::size_t count) {
  if (count == 0) throw DomainError("secant_series_oracle: count must be positive");
  // cos x = sum c_i x^(2i), sec x = sum s_i x^(2i); cos * sec = 1 gives
  // s_0 = 1 and s_j = -sum_{i=1}^{j} c_i s_{j-i}
  std::vector<Rational> cos_coeffs(count);
  BigInt factorial(1);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) factorial *= static_cast<unsigned long>((2 * i - 1) * (2 * i));
    cos_coeffs[i] = Rational(i % 2 == 0 ? BigInt(1) : BigInt(-1), factorial);
  }
  std::vector<Rational> sec(count);
  sec[0] = Rational(1);
  for (std::size_t j = 1; j < count; ++j) {
    Rational acc(0);
    for (std::size_t i = 1; i <= j; ++i) acc += cos_coeffs[i] * sec[j - i];
    sec[j] = -acc;
  }
  // s_j = (-1)^j E_{2j} / (2j)!
  std::vector<BigInt> out(count);
  factorial = 1;
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) factorial *= static_cast<unsigned long>((2 * j - 1) * (2 * j));
    Rational e = sec[j] * Rational(factorial);
    if (j % 2 == 1) e = -e;
    if (!e.is_integer()) {
      throw InternalInconsistency("secant_series_oracle: non-integral coefficient at index " +
                                  std::to_string(2 * j));
    }
    out[j] = e.numerator();
  }
  return out;
}

BigInt von_staudt_clausen_denominator(std::size_t k) {
  if (k < 2 || k % 2 != 0) throw DomainError("von_staudt_clausen_denominator: k must be even and >= 2");
  BigInt out(1);
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d == 0 && is_prime(d + 1)) out *= static_cast<unsigned long>(d + 1);
  }
  return out;
}

}  // namespace eulermod
