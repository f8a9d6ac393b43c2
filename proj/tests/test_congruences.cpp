#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulermod/congruences.hpp"
#include "oracles.hpp"

using namespace eulermod;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

// Direct term-by-term evaluation in plain machine integers, kept apart from
// the library's modular code paths.
long long direct_stern_sum(unsigned k, unsigned n, long long m) {
  long long s = 0;
  const long long two_n = 1LL << n;
  for (long long j = 0; j < two_n; ++j) {
    long long power = 1;
    for (unsigned i = 0; i < k; ++i) power *= 2 * j + 1;
    const long long sign = j % 2 == 0 ? -1 : 1;
    s += sign * power * ((j * m + (m - 1) / 2) / two_n);
  }
  return s;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

TEST_CASE("QAdicContext requires q > 1") {
  CHECK_THROWS_AS(QAdicContext(1L), DomainError);
  CHECK_THROWS_AS(QAdicContext(-4L), DomainError);
  CHECK(QAdicContext(6L).q() == 6);
}

TEST_CASE("is_q_integer") {
  CHECK(is_q_integer(frac(1, 2), QAdicContext(3L)));
  CHECK_FALSE(is_q_integer(frac(1, 2), QAdicContext(4L)));
  CHECK(is_q_integer(frac(-7, 15), QAdicContext(4L)));
  CHECK_FALSE(is_q_integer(frac(1, 3), QAdicContext(6L)));
  CHECK(is_q_integer(Rational(0), QAdicContext(6L)));
}

TEST_CASE("congruent_mod examples") {
  const QAdicContext three(3L), four(4L);
  const auto self = congruent_mod(frac(5, 7), frac(5, 7), three);
  CHECK(self.holds);
  CHECK(self.quotient_witness == Rational(0));

  const auto r = congruent_mod(Rational(17), Rational(-1), three);
  CHECK(r.holds);
  CHECK(r.quotient_witness == Rational(6));
  CHECK(r.modulus == 3);

  const auto t = congruent_mod(frac(1, 3), Rational(3), four);
  CHECK(t.holds);
  CHECK(t.quotient_witness == frac(-2, 3));

  CHECK_FALSE(congruent_mod(Rational(1), Rational(2), three).holds);
  CHECK_THROWS_AS(congruent_mod(frac(1, 2), Rational(0), four), DomainError);
  CHECK_THROWS_AS(congruent_mod(Rational(0), frac(3, 2), four), DomainError);
}

TEST_CASE("congruent_mod: witness identity and agreement with integer arithmetic") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const long q = static_cast<long>(rng() % 30) + 2;
    const QAdicContext ctx(q);
    auto random_q_integer = [&] {
      long den = 1;
      do {
        den = static_cast<long>(rng() % 40) + 1;
      } while (std::gcd(den, q) != 1);
      return frac(static_cast<long>(rng() % 2001) - 1000, den);
    };
    const Rational x = random_q_integer(), y = random_q_integer();
    const auto report = congruent_mod(x, y, ctx);
    if (report.holds) {
      CHECK(x - y == Rational(BigInt(q)) * report.quotient_witness);
      CHECK(is_q_integer(report.quotient_witness, ctx));
    }
    // Clearing denominators: x ~ y iff q | (nx*dy - ny*dx), since dx*dy is a unit.
    const BigInt cross = x.numerator() * y.denominator() - y.numerator() * x.denominator();
    CHECK(report.holds == (mod_floor(cross, BigInt(q)) == 0));
  }
}

TEST_CASE("congruent_mod is an equivalence compatible with + and *") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const long q = static_cast<long>(rng() % 14) + 2;
    const QAdicContext ctx(q);
    auto rq = [&] {
      long den = 1;
      do {
        den = static_cast<long>(rng() % 25) + 1;
      } while (std::gcd(den, q) != 1);
      return frac(static_cast<long>(rng() % 201) - 100, den);
    };
    const Rational x = rq(), z = rq(), w = rq();
    // y congruent to x by construction
    const Rational y = x + Rational(BigInt(q)) * rq();
    CHECK(congruent_mod(x, x, ctx).holds);
    CHECK(congruent_mod(x, y, ctx).holds);
    CHECK(congruent_mod(y, x, ctx).holds);
    const bool xz = congruent_mod(x, z, ctx).holds;
    CHECK(congruent_mod(y, z, ctx).holds == xz);  // transitivity both ways
    CHECK(congruent_mod(x + w, y + w, ctx).holds);
    CHECK(congruent_mod(x * w, y * w, ctx).holds);
  }
}

TEST_CASE("poly_congruent_mod") {
  const Polynomial p{frac(1, 3), Rational(0), Rational(1)};
  const Polynomial q{Rational(3), Rational(0), Rational(1)};
  CHECK(poly_congruent_mod(p, p, QAdicContext(7L)));
  CHECK(poly_congruent_mod(p, q, QAdicContext(4L)));
  CHECK_FALSE(poly_congruent_mod(Polynomial{Rational(0), Rational(1)}, Polynomial{Rational(1), Rational(1)},
                                 QAdicContext(2L)));
  // padding: x^2 + 4 against 0 mod 4 differs in the leading coefficient
  CHECK_FALSE(poly_congruent_mod(Polynomial{Rational(4), Rational(0), Rational(1)}, Polynomial(), QAdicContext(4L)));
  CHECK(poly_congruent_mod(Polynomial{Rational(4), Rational(0), Rational(8)}, Polynomial(), QAdicContext(4L)));

  const Polynomial bad{Rational(1), Rational(0), frac(1, 2)};
  try {
    poly_congruent_mod(bad, q, QAdicContext(4L));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("alternating_power_sum") {
  CHECK(alternating_power_sum(3, 2) == 17);
  CHECK(alternating_power_sum(5, 4) == 4705);
  CHECK(alternating_power_sum(1, 9) == 1);
  CHECK(alternating_power_sum(4, 2) == -32);
  CHECK(alternating_power_sum(5, 4, 5) == 0);
  CHECK(alternating_power_sum(3, 2, 7) == 3);
  CHECK(mod_floor(alternating_power_sum(5, 4), BigInt(5)) == mod_floor(euler_number(4), BigInt(5)));
}

TEST_CASE("E_k against the alternating power sum mod odd q") {
  CHECK(check_eq_1_1(2, 3).holds);
  CHECK(check_eq_1_1(0, 1).holds);
  CHECK(check_eq_1_1(12, 35).holds);
  CHECK_THROWS_AS(check_eq_1_1(2, 4), DomainError);
  for (std::uint64_t k = 0; k <= 24; k += 2) {
    for (std::uint64_t q = 1; q <= 31; q += 2) CHECK(check_eq_1_1(k, q).holds);
  }
}

TEST_CASE("stern_sum") {
  CHECK(stern_sum(2, 2, 3) == 82);
  CHECK(stern_sum(2, 1, 3) == 18);
  for (unsigned n = 1; n <= 6; ++n) CHECK(stern_sum(7, n, 1) == 0);
  CHECK_THROWS_AS(stern_sum(2, 2, 4), DomainError);
  CHECK_THROWS_AS(stern_sum(2, 0, 3), DomainError);

  for (unsigned k = 0; k <= 8; ++k) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (long long m = 1; m <= 15; m += 2) {
        const BigInt exact = stern_sum(k, n, static_cast<std::uint64_t>(m));
        CHECK(exact == BigInt(static_cast<long>(direct_stern_sum(k, n, m))));
        const std::uint64_t mod = std::uint64_t{1} << (n + 2);
        CHECK(stern_sum(k, n, static_cast<std::uint64_t>(m), mod) == mod_floor(exact, BigInt(static_cast<unsigned long>(mod))));
      }
    }
  }
}

TEST_CASE("stern_sum with m = 3 is even for even k") {
  for (std::uint64_t k = 0; k <= 100; k += 2) {
    for (unsigned n = 1; n <= 12; ++n) {
      const BigInt s = stern_sum(k, n, 3, std::uint64_t{1} << (n + 2));
      CHECK(mpz_even_p(s.get_mpz_t()) != 0);
    }
  }
}

TEST_CASE("odd-m congruence for E_k mod 2^n") {
  const auto r = check_thm_1_1(2, 2, 3);
  CHECK(r.holds);
  CHECK(r.lhs == Rational(-28));
  CHECK(r.rhs == Rational(1476));
  CHECK(r.modulus == 16);
  CHECK(check_thm_1_1(0, 1, 1).holds);
  CHECK(check_thm_1_1(10, 8, 5).holds);
  CHECK_THROWS_AS(check_thm_1_1(3, 2, 3), DomainError);
  CHECK_THROWS_AS(check_thm_1_1(2, 2, 6), DomainError);
}

TEST_CASE("2-valuation of the odd-m coefficient") {
  CHECK_FALSE(thm_1_1_coefficient_valuation(4, 1).has_value());
  // m = 3: (3^(k+1) + 1)/4 is odd
  for (std::uint64_t k = 0; k <= 40; k += 2) CHECK(thm_1_1_coefficient_valuation(k, 3) == 0);
  // m = 7, k = 2: (343 + 1)/4 = 86
  CHECK(thm_1_1_coefficient_valuation(2, 7) == 1);
}

TEST_CASE("euler_mod_2n") {
  CHECK(euler_mod_2n(2, 2) == 3);
  CHECK(euler_mod_2n(0, 1) == 1);
  CHECK(euler_mod_2n(4, 3) == 5);
  CHECK_THROWS_AS(euler_mod_2n(3, 4), DomainError);
  CHECK_THROWS_AS(euler_mod_2n(2, 0), DomainError);

  const auto exact = oracle::euler_by_boustrophedon(201);
  for (std::uint64_t k = 0; k <= 200; k += 2) {
    for (unsigned n = 1; n <= 12; ++n) {
      const BigInt expected = mod_floor(exact[k], BigInt(1UL << n));
      CHECK(euler_mod_2n(k, n) == expected.get_ui());
    }
  }
  FastPathStats stats;
  euler_mod_2n(1000, 8, &stats);
  CHECK(stats.terms == 256);
  CHECK(stats.modular_multiplications > 0);
}

TEST_CASE("check_proof_power_sum") {
  CHECK(check_proof_power_sum(2, 2));
  CHECK(check_proof_power_sum(0, 1));
  CHECK(check_proof_power_sum(40, 10));
  for (std::uint64_t k = 0; k <= 40; k += 2) {
    for (unsigned n = 1; n <= 10; ++n) CHECK(check_proof_power_sum(k, n));
  }
}

TEST_CASE("stern_valuation") {
  const auto a = stern_valuation(4, 2);
  CHECK(a.v_index == 1);
  CHECK(a.v_value == 1);
  const auto b = stern_valuation(6, 2);
  CHECK(b.v_index == 2);
  CHECK(b.v_value == 2);
  const auto c = stern_valuation(2, 6);
  CHECK(c.v_index == b.v_index);
  CHECK(c.v_value == b.v_value);
  CHECK_THROWS_AS(stern_valuation(4, 4), DomainError);
  CHECK_THROWS_AS(stern_valuation(5, 2), DomainError);
  for (std::uint64_t k = 2; k <= 64; k += 2) {
    for (std::uint64_t l = 0; l < k; l += 2) {
      const auto r = stern_valuation(k, l);
      CHECK(r.v_value == r.v_index);
    }
  }
}

TEST_CASE("bernoulli polynomial congruence mod q") {
  CHECK(check_lemma_2_1(0, 1, 1, 3).holds);
  const auto stated = check_lemma_2_1(2, 3, 3, 4);
  CHECK(stated.holds);
  CHECK(stated.route == Lemma21Route::kStated);
  const auto cleared = check_lemma_2_1(-1, 2, 5, 6);
  CHECK(cleared.holds);
  CHECK(cleared.route == Lemma21Route::kCleared);
  CHECK_THROWS_AS(check_lemma_2_1(0, 2, 3, 6), DomainError);
  CHECK_THROWS_AS(check_lemma_2_1(0, 2, 2, 4), DomainError);
  CHECK_THROWS_AS(check_lemma_2_1(0, 0, 3, 4), DomainError);

  // m = 1, a = 0 collapses both sides to zero
  const auto [lhs, rhs] = lemma_2_1_sides(0, 4, 1, 5);
  CHECK(lhs.is_zero());
  CHECK(rhs.is_zero());
}

TEST_CASE("bernoulli polynomial congruence sweep") {
  for (std::int64_t a = -5; a <= 5; ++a) {
    for (std::uint64_t q : {2u, 4u, 6u, 8u, 16u}) {
      for (std::uint64_t m : {1u, 3u, 5u, 7u}) {
        if (std::gcd(m, q) != 1) continue;
        for (std::uint64_t k = 1; k <= 12; ++k) CHECK(check_lemma_2_1(a, k, m, q).holds);
      }
    }
  }
}

TEST_CASE("euler polynomial congruence mod even q") {
  for (std::uint64_t k = 0; k <= 6; ++k) CHECK(check_lemma_2_2(0, k, 1, 2));
  CHECK(check_lemma_2_2(1, 2, 3, 4));
  CHECK(check_lemma_2_2(3, 4, 5, 6));
  CHECK_THROWS_AS(check_lemma_2_2(0, 2, 3, 5), DomainError);
  CHECK_THROWS_AS(check_lemma_2_2(0, 2, 3, 6), DomainError);
  for (std::int64_t a = -5; a <= 5; ++a) {
    for (std::uint64_t q : {2u, 4u, 6u, 8u, 16u}) {
      for (std::uint64_t m : {1u, 3u, 5u, 7u}) {
        if (std::gcd(m, q) != 1) continue;
        for (std::uint64_t k = 0; k <= 12; ++k) CHECK(check_lemma_2_2(a, k, m, q));
      }
    }
  }
}

TEST_CASE("alternating floor sum closed form") {
  CHECK(lemma_2_3_value(0, 1, 2) == std::pair{Rational(0), Rational(0)});
  CHECK(lemma_2_3_value(1, 3, 4) == std::pair{Rational(2), Rational(2)});
  const auto [computed, closed] = lemma_2_3_value(-3, 5, 8);
  CHECK(computed == closed);
  CHECK(closed == Rational(3));
  CHECK_THROWS_AS(lemma_2_3_value(0, 3, 5), DomainError);
  CHECK_THROWS_AS(lemma_2_3_value(0, 3, 6), DomainError);
}

TEST_CASE("kummer_check") {
  const auto r = kummer_check(13, 2, 16, 4);
  CHECK(r.report.holds);
  CHECK_FALSE(r.exponents_congruent);
  CHECK(r.report.modulus == 169);
  // independent: numerator of B16/16 - B4/4 divisible by 169
  const mpq_class diff = oracle::bernoulli_by_power_sums(16) / 16 - oracle::bernoulli_by_power_sums(4) / 4;
  CHECK(mpz_divisible_ui_p(diff.get_num().get_mpz_t(), 169) != 0);

  const auto s = kummer_check(5, 1, 6, 2);
  CHECK(s.report.holds);
  CHECK(s.exponents_congruent);
  CHECK(s.report.lhs - s.report.rhs == frac(-5, 63));

  const auto t = kummer_check(7, 1, 4, 4);
  CHECK(t.report.holds);
  CHECK(t.exponents_congruent);

  CHECK_THROWS_AS(kummer_check(5, 1, 4, 2), DomainError);
  CHECK_THROWS_AS(kummer_check(9, 1, 4, 2), DomainError);

  // Kummer's implication over a small grid, for indices above n
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (unsigned n = 1; n <= 2; ++n) {
      for (std::uint64_t k = 2; k <= 60; k += 2) {
        for (std::uint64_t l = n + 1; l <= k; ++l) {
          if (l % 2 == 1 || k % (p - 1) == 0 || l % (p - 1) == 0) continue;
          const auto res = kummer_check(p, n, k, l);
          if (res.exponents_congruent) CHECK(res.report.holds);
        }
      }
    }
  }
}

TEST_CASE("kummer: plain form needs indices above n") {
  // 22 = 2 (mod phi(25)) but B_22/22 and B_2/2 differ mod 25
  const auto r = kummer_check(5, 2, 22, 2);
  CHECK(r.exponents_congruent);
  CHECK_FALSE(r.report.holds);
  // with the Euler factor (1 - p^(k-1)) restored the congruence holds
  auto euler_factor = [](unsigned p, unsigned k) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k - 1);
    return mpq_class(1 - pk);
  };
  for (unsigned p : {5u, 7u}) {
    for (unsigned k = 2; k <= 40; k += 2) {
      for (unsigned l = 2; l <= k; l += 2) {
        if (k % (p - 1) == 0 || l % (p - 1) == 0 || (k - l) % (p * (p - 1)) != 0) continue;
        const mpq_class d = euler_factor(p, k) * oracle::bernoulli_by_power_sums(k) / k -
                            euler_factor(p, l) * oracle::bernoulli_by_power_sums(l) / l;
        CHECK(mpz_divisible_ui_p(d.get_num().get_mpz_t(), p * p) != 0);
      }
    }
  }
}

TEST_CASE("adams_thangadurai_valuation") {
  const auto a = adams_thangadurai_valuation(13, 26);
  CHECK(a.index_valuation == 1);
  CHECK(a.numerator_valuation == 1);
  const auto b = adams_thangadurai_valuation(5, 2);
  CHECK(b.index_valuation == 0);
  CHECK(b.numerator_valuation == 0);
  const auto c = adams_thangadurai_valuation(7, 14);
  CHECK(c.index_valuation == 1);
  CHECK(c.numerator_valuation == 1);
  CHECK_THROWS_AS(adams_thangadurai_valuation(5, 8), DomainError);
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (std::uint64_t k = 2; k <= 80; k += 2) {
      if (k % (p - 1) == 0) continue;
      const auto v = adams_thangadurai_valuation(p, k);
      CHECK(v.numerator_valuation >= v.index_valuation);
    }
  }
}
