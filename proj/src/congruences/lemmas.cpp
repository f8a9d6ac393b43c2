#include <numeric>
#include <string>

#include "eulermod/congruences.hpp"

namespace eulermod {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

Rational ratio(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

void require_coprime(std::uint64_t m, std::uint64_t q, const char* who) {
  if (m == 0) throw DomainError(std::string(who) + ": m must be positive");
  if (std::gcd(m, q) != 1) {
    throw DomainError(std::string(who) + ": gcd(m, q) must be 1, got m=" + std::to_string(m) + ", q=" +
                      std::to_string(q));
  }
}

// floor((a + jm)/q) + (1 - m)/2
Rational floor_weight(std::int64_t a, std::uint64_t j, std::uint64_t m, std::uint64_t q) {
  const auto shift = a + static_cast<std::int64_t>(j * m);
  return Rational(static_cast<long>(floor_div(shift, static_cast<std::int64_t>(q)))) +
         ratio(1 - static_cast<std::int64_t>(m), 2);
}

bool congruent_or_inconsistent(const Polynomial& lhs, const Polynomial& rhs, const QAdicContext& ctx,
                               const std::string& who) {
  try {
    return poly_congruent_mod(lhs, rhs, ctx);
  } catch (const DomainError& e) {
    throw InternalInconsistency(who + ": " + e.what());
  }
}

}  // namespace

std::pair<Polynomial, Polynomial> lemma_2_1_sides(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q) {
  if (k == 0) throw DomainError("lemma_2_1: k must be positive");
  if (q < 2) throw DomainError("lemma_2_1: q must exceed 1");
  require_coprime(m, q, "lemma_2_1");

  const Polynomial b = bernoulli_polynomial(k);
  const Rational inv_m = ratio(1, static_cast<std::int64_t>(m));
  Polynomial lhs = b.compose_affine(inv_m, Rational(static_cast<long>(a)) * inv_m) *
                   pow(Rational(static_cast<long>(m)), static_cast<unsigned long>(k));
  lhs -= b;
  lhs *= ratio(1, static_cast<std::int64_t>(k));

  Polynomial rhs;
  for (std::uint64_t j = 0; j < q; ++j) {
    const Rational w = floor_weight(a, j, m, q);
    if (w.is_zero()) continue;
    const Rational shift(static_cast<long>(a + static_cast<std::int64_t>(j * m)));
    rhs += Polynomial::shifted_power(shift, static_cast<int>(k - 1)) * w;
  }
  return {std::move(lhs), std::move(rhs)};
}

Lemma21Result check_lemma_2_1(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q) {
  auto [lhs, rhs] = lemma_2_1_sides(a, k, m, q);
  const QAdicContext ctx(big(q));
  Lemma21Result result;
  if (std::gcd(k, q) == 1) {
    result.route = Lemma21Route::kStated;
    result.holds = congruent_or_inconsistent(lhs, rhs, ctx, "check_lemma_2_1");
  } else {
    result.route = Lemma21Route::kCleared;
    const Rational kk(static_cast<long>(k));
    result.holds = congruent_or_inconsistent(lhs * kk, rhs * kk, ctx, "check_lemma_2_1");
  }
  return result;
}

std::pair<Polynomial, Polynomial> lemma_2_2_sides(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q) {
  if (q == 0 || q % 2 != 0) throw DomainError("lemma_2_2: q must be even and positive, got " + std::to_string(q));
  require_coprime(m, q, "lemma_2_2");

  const Polynomial e = euler_polynomial(k);
  const Rational inv_m = ratio(1, static_cast<std::int64_t>(m));
  const Rational half = ratio(1, 2);
  Polynomial lhs = e.compose_affine(inv_m, Rational(static_cast<long>(a)) * inv_m) *
                   (pow(Rational(static_cast<long>(m)), static_cast<unsigned long>(k + 1)) * half);
  const Rational sign_a = (a % 2 == 0) ? Rational(1) : Rational(-1);
  lhs -= e * (sign_a * half);

  Polynomial rhs;
  for (std::uint64_t j = 0; j < q; ++j) {
    Rational w = floor_weight(a, j, m, q);
    if (w.is_zero()) continue;
    if (j % 2 == 0) w = -w;  // (-1)^(j-1)
    const Rational shift(static_cast<long>(a + static_cast<std::int64_t>(j * m)));
    rhs += Polynomial::shifted_power(shift, static_cast<int>(k)) * w;
  }
  return {std::move(lhs), std::move(rhs)};
}

bool check_lemma_2_2(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q) {
  auto [lhs, rhs] = lemma_2_2_sides(a, k, m, q);
  return congruent_or_inconsistent(lhs, rhs, QAdicContext(big(q)), "check_lemma_2_2");
}

std::pair<Rational, Rational> lemma_2_3_value(std::int64_t a, std::uint64_t m, std::uint64_t q) {
  if (q == 0 || q % 2 != 0) throw DomainError("lemma_2_3_value: q must be even and positive, got " + std::to_string(q));
  require_coprime(m, q, "lemma_2_3_value");
  Rational computed(0);
  for (std::uint64_t j = 0; j < q; ++j) {
    const Rational w = floor_weight(a, j, m, q);
    if (j % 2 == 0) computed -= w; else computed += w;
  }
  const std::int64_t sign_a = (a % 2 == 0) ? 1 : -1;
  return {computed, ratio(static_cast<std::int64_t>(m) - sign_a, 2)};
}

KummerResult kummer_check(std::uint64_t p, unsigned n, std::uint64_t k, std::uint64_t l) {
  if (p < 3 || !is_prime(p)) throw DomainError("kummer_check: p must be an odd prime, got " + std::to_string(p));
  if (n < 1) throw DomainError("kummer_check: n must be positive");
  if (k == 0 || l == 0 || k % 2 != 0 || l % 2 != 0) throw DomainError("kummer_check: k and l must be even and positive");
  if (k % (p - 1) == 0 || l % (p - 1) == 0) {
    throw DomainError("kummer_check: p-1 divides k or l, so B_k/k or B_l/l is not a p-integer");
  }
  BigInt pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  const Rational x = bernoulli_number(k) / Rational(static_cast<long>(k));
  const Rational y = bernoulli_number(l) / Rational(static_cast<long>(l));
  KummerResult out;
  out.report = congruent_mod(x, y, QAdicContext(pn));
  const BigInt phi = pn / big(p) * big(p - 1);
  BigInt gap = big(k) - big(l);
  mpz_fdiv_r(gap.get_mpz_t(), gap.get_mpz_t(), phi.get_mpz_t());
  out.exponents_congruent = gap == 0;
  return out;
}

AdamsValuation adams_thangadurai_valuation(std::uint64_t p, std::uint64_t k) {
  if (p < 3 || !is_prime(p)) throw DomainError("adams_thangadurai_valuation: p must be an odd prime");
  if (k == 0 || k % 2 != 0) throw DomainError("adams_thangadurai_valuation: k must be even and positive");
  if (k % (p - 1) == 0) {
    throw DomainError("adams_thangadurai_valuation: p-1 divides k, so p divides the denominator of B_k");
  }
  AdamsValuation out;
  out.index_valuation = v_adic(big(k), static_cast<unsigned long>(p));
  out.numerator_valuation = v_adic(bernoulli_number(k).numerator(), static_cast<unsigned long>(p));
  return out;
}

}  // namespace eulermod
