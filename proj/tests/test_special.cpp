#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "eulermod/cache.hpp"
#include "eulermod/special.hpp"
#include "oracles.hpp"

using namespace eulermod;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("eulermod_test_" + name);
}

}  // namespace

TEST_CASE("euler_number examples") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(3) == 0);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(12) == 2702765);
}

TEST_CASE("euler_number matches the boustrophedon oracle") {
  const auto expected = oracle::euler_by_boustrophedon(202);
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(euler_number(n) == expected[n]);
}

TEST_CASE("euler parity: even-index values odd, odd-index values zero") {
  for (std::size_t k = 0; k <= 201; ++k) {
    const BigInt e = euler_number(k);
    if (k % 2 == 1) {
      CHECK(e == 0);
    } else {
      CHECK(mpz_odd_p(e.get_mpz_t()) != 0);
    }
  }
}

TEST_CASE("bernoulli_number examples") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == frac(-1, 2));
  CHECK(bernoulli_number(4) == frac(-1, 30));
  CHECK(bernoulli_number(7) == Rational(0));
  CHECK(bernoulli_number(14) == frac(7, 6));
  CHECK(bernoulli_number(16) == frac(-3617, 510));
}

TEST_CASE("bernoulli_number matches the power-sum oracle") {
  for (unsigned m = 0; m <= 40; ++m) {
    const mpq_class expected = oracle::bernoulli_by_power_sums(m);
    CHECK(bernoulli_number(m) == Rational(expected.get_num(), expected.get_den()));
  }
}

TEST_CASE("von Staudt-Clausen denominators") {
  CHECK(von_staudt_clausen_denominator(2) == 6);
  CHECK(von_staudt_clausen_denominator(12) == 2730);
  CHECK_THROWS_AS(von_staudt_clausen_denominator(3), DomainError);
  for (std::size_t k = 2; k <= 100; k += 2) CHECK(bernoulli_number(k).denominator() == von_staudt_clausen_denominator(k));
}

TEST_CASE("secant series oracle") {
  CHECK(secant_series_oracle(1) == std::vector<BigInt>{BigInt(1)});
  CHECK(secant_series_oracle(3) == std::vector<BigInt>{BigInt(1), BigInt(-1), BigInt(5)});
  const auto sec = secant_series_oracle(64);
  for (std::size_t j = 0; j < sec.size(); ++j) CHECK(sec[j] == euler_number(2 * j));
  CHECK_THROWS_AS(secant_series_oracle(0), DomainError);
}

TEST_CASE("euler and bernoulli polynomials") {
  const Rational half = frac(1, 2);
  CHECK(euler_polynomial(0) == Polynomial(Rational(1)));
  CHECK(euler_polynomial(1) == Polynomial{-half, Rational(1)});
  CHECK(bernoulli_polynomial(0) == Polynomial(Rational(1)));
  CHECK(bernoulli_polynomial(1) == Polynomial{-half, Rational(1)});
  CHECK(bernoulli_polynomial(2) == Polynomial{frac(1, 6), Rational(-1), Rational(1)});
  CHECK(bernoulli_polynomial(2).evaluate(Rational(0)) == frac(1, 6));
  CHECK(euler_polynomial(5).evaluate(half) * Rational(32) == Rational(0));
  // E_2(x) = x^2 - x
  CHECK(euler_polynomial(2) == Polynomial{Rational(0), Rational(-1), Rational(1)});
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(euler_polynomial(n).is_monic());
    CHECK(euler_polynomial(n).degree() == static_cast<int>(n));
    CHECK(bernoulli_polynomial(n).is_monic());
    CHECK(bernoulli_polynomial(n).degree() == static_cast<int>(n));
  }
}

TEST_CASE("bernoulli polynomial reproduces power sums") {
  // sum_{i<N} i^4 = (B_5(N) - B_5(0)) / 5
  const Polynomial b5 = bernoulli_polynomial(5);
  for (long n = 1; n <= 12; ++n) {
    long s = 0;
    for (long i = 0; i < n; ++i) s += i * i * i * i;
    CHECK((b5.evaluate(Rational(n)) - b5.evaluate(Rational(0))) / Rational(5) == Rational(s));
  }
}

TEST_CASE("E_n = 2^n E_n(1/2)") {
  const Rational half = frac(1, 2);
  for (std::size_t n = 0; n <= 200; n += 7) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
    CHECK(Rational(p) * euler_polynomial(n).evaluate(half) == Rational(euler_number(n)));
  }
}

TEST_CASE("identity checkers") {
  CHECK(check_raabe(5, 1));
  CHECK(check_raabe(2, 2));
  CHECK(check_raabe(12, 5));
  CHECK(check_raabe(0, 3));
  CHECK_THROWS_AS(check_raabe(2, 0), DomainError);
  CHECK(check_euler_bernoulli_relation(0));
  CHECK(check_euler_bernoulli_relation(1));
  CHECK(check_euler_bernoulli_relation(10));
  CHECK(check_reflection(0));
  CHECK(check_reflection(1));
  CHECK(check_reflection(9));
  // n = 0 of the relation: B_1(x) - 2 B_1(x/2) = 1/2
  const auto sides = euler_bernoulli_relation_sides(0);
  CHECK(sides[1] == Polynomial(frac(1, 2)));
}

TEST_CASE("identity checkers reject a perturbed polynomial") {
  auto [lhs, rhs] = reflection_sides(6);
  CHECK(lhs == rhs);
  CHECK_FALSE(lhs + Polynomial::monomial(frac(1, 1000), 3) == rhs);
}

TEST_CASE("tables are append-only and consistent under concurrent readers") {
  EulerNumberTable table;
  table.ensure(20);
  const BigInt e20 = table.at(20);
  std::vector<std::thread> threads;
  std::vector<BigInt> seen(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = table.at(static_cast<std::size_t>(60 + 10 * t)); });
  }
  for (auto& th : threads) th.join();
  CHECK(table.at(20) == e20);
  for (int t = 0; t < 8; ++t) CHECK(seen[static_cast<std::size_t>(t)] == euler_number(static_cast<std::size_t>(60 + 10 * t)));
  CHECK(table.computed_up_to() == 130);
  CHECK_THROWS_AS(table.adopt({BigInt(1), BigInt(0), BigInt(-3)}), InternalInconsistency);
}

TEST_CASE("adopted prefixes extend correctly") {
  EulerNumberTable source;
  source.ensure(30);
  EulerNumberTable target;
  target.adopt(source.snapshot());
  CHECK(target.computed_up_to() == 30);
  CHECK(target.at(50) == euler_number(50));
  BernoulliNumberTable bsource;
  bsource.ensure(30);
  BernoulliNumberTable btarget;
  btarget.adopt(bsource.snapshot());
  CHECK(btarget.at(50) == bernoulli_number(50));
}

TEST_CASE("cache round trip") {
  const auto path = temp_file("roundtrip.txt");
  EulerNumberTable e;
  BernoulliNumberTable b;
  e.ensure(100);
  b.ensure(100);
  save_tables(path, e, b);
  const CacheContents loaded = read_cache(path, 1);
  CHECK(loaded.euler == e.snapshot());
  CHECK(loaded.bernoulli == b.snapshot());
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK_NOTHROW(read_cache(path, seed));

  EulerNumberTable e2;
  BernoulliNumberTable b2;
  load_tables(path, e2, b2);
  CHECK(e2.computed_up_to() == 100);
  CHECK(b2.at(100) == b.at(100));
  std::filesystem::remove(path);
}

TEST_CASE("cache: missing or empty file is an empty cache") {
  const auto path = temp_file("empty.txt");
  std::filesystem::remove(path);
  CHECK(read_cache(path).euler.empty());
  { std::ofstream(path) << ""; }
  const auto c = read_cache(path);
  CHECK(c.euler.empty());
  CHECK(c.bernoulli.empty());
  std::filesystem::remove(path);
}

namespace {

std::string corrupt_record(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with(prefix)) {
      // bump a digit in the middle of the value
      const auto pos = line.size() - 3;
      line[pos] = line[pos] == '9' ? '0' : static_cast<char>(line[pos] + 1);
    }
    out << line << '\n';
  }
  return out.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cache: corrupted digits are refused") {
  const auto path = temp_file("tamper.txt");
  EulerNumberTable e;
  BernoulliNumberTable b;
  e.ensure(100);
  b.ensure(100);
  save_tables(path, e, b);
  const std::string good = slurp(path);

  for (const std::string record : {"E 50 ", "E 100 ", "E 8 ", "B 40 ", "B 98 "}) {
    { std::ofstream(path) << corrupt_record(good, record); }
    CHECK_THROWS_AS(read_cache(path), CacheError);
  }
  { std::ofstream(path) << good << "E 7 x\n"; }
  CHECK_THROWS_AS(read_cache(path), CacheError);
  { std::ofstream(path) << "E 0 1\nE 2 -1\n"; }
  CHECK_THROWS_AS(read_cache(path), CacheError);  // gap at index 1
  { std::ofstream(path) << "E 0 2\n"; }
  CHECK_THROWS_AS(read_cache(path), CacheError);
  { std::ofstream(path) << "B 0 1\nB 1 1/2\n"; }
  CHECK_THROWS_AS(read_cache(path), CacheError);
  std::filesystem::remove(path);
}
