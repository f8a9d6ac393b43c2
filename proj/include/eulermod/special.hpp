#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "eulermod/exactmath.hpp"

namespace eulermod {

/// Memoized E_0, E_1, ... from the alternating binomial recurrence
///   E_0 = 1,  E_n = -sum_{k < n, k = n mod 2} C(n, k) E_k.
///
/// Append-only.  Any number of readers may call at() concurrently with one
/// extending call; readers only ever see fully computed prefixes.
class EulerNumberTable {
 public:
  EulerNumberTable();

  /// E_n, extending the table first if needed.
  BigInt at(std::size_t n);

  /// Makes sure E_0..E_n are stored.
  void ensure(std::size_t n);

  /// Highest stored index.
  std::size_t computed_up_to() const;

  /// Copy of the stored prefix E_0..E_{computed_up_to()}.
  std::vector<BigInt> snapshot() const;

  /// Installs a validated prefix, e.g. loaded from a cache file.  Entries that
  /// overlap stored ones must agree; otherwise InternalInconsistency is thrown.
  void adopt(const std::vector<BigInt>& prefix);

  /// Big-integer multiplications performed by the recurrence so far.
  std::uint64_t multiplications() const { return multiplications_.load(); }

 private:
  void extend_locked(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<BigInt> values_;
  std::vector<BigInt> pascal_row_;  // C(size-1, j)
  std::atomic<std::uint64_t> multiplications_{0};
};

/// Memoized B_0, B_1, ... from B_0 = 1 and sum_{k=0}^{n} C(n+1, k) B_k = 0,
/// giving B_1 = -1/2.  Same concurrency contract as EulerNumberTable.
class BernoulliNumberTable {
 public:
  BernoulliNumberTable();

  Rational at(std::size_t n);
  void ensure(std::size_t n);
  std::size_t computed_up_to() const;
  std::vector<Rational> snapshot() const;
  void adopt(const std::vector<Rational>& prefix);

 private:
  void extend_locked(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
  std::vector<BigInt> pascal_row_;  // C(size, j)
};

/// Process-wide tables behind euler_number() and bernoulli_number().
EulerNumberTable& shared_euler_table();
BernoulliNumberTable& shared_bernoulli_table();

BigInt euler_number(std::size_t n);
Rational bernoulli_number(std::size_t n);

/// E_n(x) = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^(n-k).
Polynomial euler_polynomial(std::size_t n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Polynomial bernoulli_polynomial(std::size_t n);

/// Raabe: m^(n-1) sum_{r<m} B_n((x+r)/m) == B_n(x), compared coefficientwise.
bool check_raabe(std::size_t n, std::size_t m);
std::pair<Polynomial, Polynomial> raabe_sides(std::size_t n, std::size_t m);

/// Both halves of
///   (n+1)/2 E_n(x) = B_{n+1}(x) - 2^(n+1) B_{n+1}(x/2)
///                  = 2^(n+1) B_{n+1}((x+1)/2) - B_{n+1}(x).
bool check_euler_bernoulli_relation(std::size_t n);

/// ((n+1)/2) E_n(x), B_{n+1}(x) - 2^(n+1) B_{n+1}(x/2), 2^(n+1) B_{n+1}((x+1)/2) - B_{n+1}(x).
std::array<Polynomial, 3> euler_bernoulli_relation_sides(std::size_t n);

/// E_n(x) + E_n(x+1) == 2 x^n.
bool check_reflection(std::size_t n);
std::pair<Polynomial, Polynomial> reflection_sides(std::size_t n);

/// E_0, E_2, ..., E_{2(count-1)} from the Taylor coefficients of sec x,
/// obtained by inverting the cosine series over Q.  Shares no code with the
/// recurrence and exists to cross-check it.
std::vector<BigInt> secant_series_oracle(std::size_t count);

/// Product of the primes p with (p-1) | k, for even k >= 2.
BigInt von_staudt_clausen_denominator(std::size_t k);

}  // namespace eulermod
