#include <string>

#include "eulermod/congruences.hpp"

namespace eulermod {

namespace {

BigInt big(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(v));
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

void require_even(std::uint64_t k, const char* who) {
  if (k % 2 != 0) throw DomainError(std::string(who) + ": k must be even, got " + std::to_string(k));
}

}  // namespace

BigInt alternating_power_sum(std::uint64_t q, std::uint64_t k, std::optional<std::uint64_t> modulus) {
  if (q == 0) throw DomainError("alternating_power_sum: q must be positive");
  if (modulus) {
    const std::uint64_t mod = *modulus;
    if (mod == 0) throw DomainError("alternating_power_sum: modulus must be positive");
    if (mod == 1) return BigInt(0);
    std::uint64_t acc = 0;
    for (std::uint64_t j = 0; j < q; ++j) {
      const std::uint64_t term = mod_pow(static_cast<std::int64_t>(2 * j + 1), k, mod);
      acc = (j % 2 == 0) ? (acc + term) % mod : (acc + mod - term) % mod;
    }
    return big(acc);
  }
  BigInt acc(0);
  for (std::uint64_t j = 0; j < q; ++j) {
    const BigInt term = ipow(2 * j + 1, k);
    if (j % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

CongruenceReport check_eq_1_1(std::uint64_t k, std::uint64_t q) {
  if (q == 0 || q % 2 == 0) throw DomainError("check_eq_1_1: q must be odd and positive, got " + std::to_string(q));
  const Rational lhs(euler_number(k));
  const Rational rhs(alternating_power_sum(q, k));
  if (q == 1) {
    // everything is congruent mod 1
    return CongruenceReport{lhs, rhs, BigInt(1), true, lhs - rhs};
  }
  return congruent_mod(lhs, rhs, QAdicContext(big(q)));
}

BigInt stern_sum(std::uint64_t k, unsigned n, std::uint64_t m, std::optional<std::uint64_t> modulus,
                 FastPathStats* stats) {
  if (m % 2 == 0) throw DomainError("stern_sum: m must be odd, got " + std::to_string(m));
  if (n < 1 || n > 40) throw DomainError("stern_sum: n must lie in [1, 40]");
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t half_m = (m - 1) / 2;
  FastPathStats local;

  if (modulus) {
    const std::uint64_t mod = *modulus;
    if (mod < 2) throw DomainError("stern_sum: modulus must be >= 2");
    std::uint64_t acc = 0;
    for (std::uint64_t j = 0; j < count; ++j) {
      ++local.terms;
      const auto fl = static_cast<std::uint64_t>((static_cast<unsigned __int128>(j) * m + half_m) >> n);
      if (fl == 0) continue;
      std::uint64_t term = mod_pow(static_cast<std::int64_t>(2 * j + 1), k, mod, &local.modular_multiplications);
      term = mod_mul(term, fl % mod, mod);
      ++local.modular_multiplications;
      // (-1)^(j-1): minus for even j
      acc = (j % 2 == 1) ? (acc + term) % mod : (acc + mod - term) % mod;
    }
    if (stats != nullptr) {
      stats->terms += local.terms;
      stats->modular_multiplications += local.modular_multiplications;
    }
    return big(acc);
  }

  BigInt acc(0);
  for (std::uint64_t j = 0; j < count; ++j) {
    const auto fl = static_cast<std::uint64_t>((static_cast<unsigned __int128>(j) * m + half_m) >> n);
    if (fl == 0) continue;
    BigInt term = ipow(2 * j + 1, k) * big(fl);
    if (j % 2 == 1) acc += term; else acc -= term;
  }
  if (stats != nullptr) stats->terms += count;
  return acc;
}

CongruenceReport check_thm_1_1(std::uint64_t k, unsigned n, std::uint64_t m) {
  require_even(k, "check_thm_1_1");
  if (n < 1) throw DomainError("check_thm_1_1: n must be positive");
  if (m % 2 == 0) throw DomainError("check_thm_1_1: m must be odd and positive, got " + std::to_string(m));
  const BigInt sign = ((m - 1) / 2) % 2 == 0 ? BigInt(1) : BigInt(-1);
  const BigInt coefficient = ipow(m, k + 1) - sign;
  const Rational lhs(BigInt(coefficient * euler_number(k)));
  const Rational rhs(BigInt(2 * ipow(m, k) * stern_sum(k, n, m)));
  BigInt modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), 2, n + 2);
  return congruent_mod(lhs, rhs, QAdicContext(modulus));
}

std::optional<long> thm_1_1_coefficient_valuation(std::uint64_t k, std::uint64_t m) {
  require_even(k, "thm_1_1_coefficient_valuation");
  if (m % 2 == 0) throw DomainError("thm_1_1_coefficient_valuation: m must be odd");
  const BigInt sign = ((m - 1) / 2) % 2 == 0 ? BigInt(1) : BigInt(-1);
  const BigInt numerator = ipow(m, k + 1) - sign;
  if (numerator == 0) return std::nullopt;
  return v_adic(numerator, 2) - 2;
}

std::uint64_t euler_mod_2n(std::uint64_t k, unsigned n, FastPathStats* stats) {
  require_even(k, "euler_mod_2n");
  if (n < 1 || n > 40) throw DomainError("euler_mod_2n: n must lie in [1, 40]");
  const std::uint64_t mod_n = std::uint64_t{1} << n;
  // S is carried mod 2^(n+2) so that S mod 2^(n+1), and thus S/2 mod 2^n, are exact
  const std::uint64_t mod_s = mod_n << 2U;
  FastPathStats local;
  const std::uint64_t s = stern_sum(k, n, 3, mod_s, &local).get_ui();
  if (s % 2 != 0) {
    throw InternalInconsistency("euler_mod_2n: stern sum is odd for k=" + std::to_string(k) + ", n=" +
                                std::to_string(n));
  }
  const std::uint64_t half_s = (s / 2) % mod_n;
  // c = (3^(k+1) + 1) / 4 mod 2^n, odd because 3^(k+1) + 1 = 4 mod 8
  const std::uint64_t p3 = mod_pow(3, k + 1, mod_s, &local.modular_multiplications);
  const std::uint64_t c = ((p3 + 1) % mod_s) / 4 % mod_n;
  if (c % 2 == 0) throw InternalInconsistency("euler_mod_2n: (3^(k+1)+1)/4 is even for k=" + std::to_string(k));
  const std::uint64_t c_inv = mod_inverse(static_cast<std::int64_t>(c), mod_n);
  const std::uint64_t three_k = mod_pow(3, k, mod_n, &local.modular_multiplications);
  const std::uint64_t out = mod_mul(mod_mul(c_inv, three_k, mod_n), half_s, mod_n);
  local.modular_multiplications += 2;
  if (stats != nullptr) {
    stats->terms += local.terms;
    stats->modular_multiplications += local.modular_multiplications;
  }
  return out;
}

bool check_proof_power_sum(std::uint64_t k, unsigned n) {
  require_even(k, "check_proof_power_sum");
  if (n < 1 || n > 40) throw DomainError("check_proof_power_sum: n must lie in [1, 40]");
  return alternating_power_sum(std::uint64_t{1} << n, k, std::uint64_t{1} << (n + 1)) == 0;
}

ValuationRecord stern_valuation(std::uint64_t k, std::uint64_t l) {
  require_even(k, "stern_valuation");
  require_even(l, "stern_valuation");
  if (k == l) throw DomainError("stern_valuation: k and l must differ");
  ValuationRecord rec;
  rec.k = k;
  rec.l = l;
  const BigInt index_gap = big(k) - big(l);
  rec.v_index = v_adic(index_gap, 2);
  const BigInt value_gap = euler_number(k) - euler_number(l);
  if (value_gap == 0) {
    throw InternalInconsistency("stern_valuation: E_" + std::to_string(k) + " = E_" + std::to_string(l));
  }
  rec.v_value = v_adic(value_gap, 2);
  return rec;
}

}  // namespace eulermod
