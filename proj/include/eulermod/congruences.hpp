#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "eulermod/exactmath.hpp"
#include "eulermod/special.hpp"

namespace eulermod {

/// Z_q, the rationals a/b with gcd(b, q) = 1, for an integer q > 1.
class QAdicContext {
 public:
  explicit QAdicContext(BigInt q);
  explicit QAdicContext(long q) : QAdicContext(BigInt(q)) {}

  const BigInt& q() const { return q_; }

 private:
  BigInt q_;
};

/// Outcome of testing lhs = rhs (mod modulus).  When holds, lhs - rhs equals
/// modulus * quotient_witness with the witness a q-integer.
struct CongruenceReport {
  Rational lhs;
  Rational rhs;
  BigInt modulus;
  bool holds = false;
  Rational quotient_witness;
};

bool is_q_integer(const Rational& x, const QAdicContext& ctx);

/// x = y (mod q) in Z_q.  Decided twice, once by checking that (x - y)/q is a
/// q-integer and once by reducing numerator * denominator^-1 modulo q; the
/// two must agree or InternalInconsistency is thrown.  Non q-integer inputs
/// throw DomainError.
CongruenceReport congruent_mod(const Rational& x, const Rational& y, const QAdicContext& ctx);

/// Coefficientwise congruence.  A non q-integer coefficient throws
/// DomainError naming its index.
bool poly_congruent_mod(const Polynomial& p, const Polynomial& q, const QAdicContext& ctx);

/// sum_{j=0}^{q-1} (-1)^j (2j+1)^k, exactly or reduced into [0, modulus).
BigInt alternating_power_sum(std::uint64_t q, std::uint64_t k, std::optional<std::uint64_t> modulus = std::nullopt);

/// E_k = sum_{j<q} (-1)^j (2j+1)^k (mod q) for odd q.  q = 1 holds vacuously.
CongruenceReport check_eq_1_1(std::uint64_t k, std::uint64_t q);

/// Operation counters for the modular fast path.
struct FastPathStats {
  std::uint64_t terms = 0;
  std::uint64_t modular_multiplications = 0;
};

/// S = sum_{j=0}^{2^n-1} (-1)^(j-1) (2j+1)^k floor((jm + (m-1)/2) / 2^n),
/// exactly or reduced into [0, modulus).  m must be odd.
BigInt stern_sum(std::uint64_t k, unsigned n, std::uint64_t m, std::optional<std::uint64_t> modulus = std::nullopt,
                 FastPathStats* stats = nullptr);

/// Integer form of the general-m congruence for E_k mod 2^n, multiplied by 4:
///   (m^(k+1) - (-1)^((m-1)/2)) E_k = 2 m^k S (mod 2^(n+2)).
/// m = 3 is the special case used by euler_mod_2n.
CongruenceReport check_thm_1_1(std::uint64_t k, unsigned n, std::uint64_t m);

/// v_2 of (m^(k+1) - (-1)^((m-1)/2)) / 4, the coefficient of E_k above.
/// Returns nullopt when the coefficient vanishes (m = 1).
std::optional<long> thm_1_1_coefficient_valuation(std::uint64_t k, std::uint64_t m);

/// E_k mod 2^n for even k, computed from S = stern_sum(k, n, 3) with modular
/// powering only; never touches the exact E_k.  1 <= n <= 40.
std::uint64_t euler_mod_2n(std::uint64_t k, unsigned n, FastPathStats* stats = nullptr);

/// 2^(n+1) divides sum_{j<2^n} (-1)^j (2j+1)^k.
bool check_proof_power_sum(std::uint64_t k, unsigned n);

struct ValuationRecord {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  long v_index = 0;  // v_2(k - l)
  long v_value = 0;  // v_2(E_k - E_l)
};

ValuationRecord stern_valuation(std::uint64_t k, std::uint64_t l);

enum class Lemma21Route { kStated, kCleared };

struct Lemma21Result {
  bool holds = false;
  Lemma21Route route = Lemma21Route::kStated;
};

/// (1/k)(m^k B_k((x+a)/m) - B_k(x))
///   = sum_{j<q} (floor((a+jm)/q) + (1-m)/2) (x+a+jm)^(k-1)  (mod q).
/// When 1/k is not a q-integer both sides are multiplied by k first and the
/// route is reported as kCleared.
Lemma21Result check_lemma_2_1(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q);

/// Both sides of the Bernoulli polynomial congruence above, expanded (stated form).
std::pair<Polynomial, Polynomial> lemma_2_1_sides(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q);

/// (m^(k+1)/2) E_k((x+a)/m) - ((-1)^a / 2) E_k(x)
///   = sum_{j<q} (-1)^(j-1) (floor((a+jm)/q) + (1-m)/2) (x+a+jm)^k  (mod q)
/// for even q coprime to m.
bool check_lemma_2_2(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q);

std::pair<Polynomial, Polynomial> lemma_2_2_sides(std::int64_t a, std::uint64_t k, std::uint64_t m, std::uint64_t q);

/// The alternating floor sum sum_{j<q} (-1)^(j-1) (floor((a+jm)/q) + (1-m)/2) and its closed form (m - (-1)^a)/2.
std::pair<Rational, Rational> lemma_2_3_value(std::int64_t a, std::uint64_t m, std::uint64_t q);

struct KummerResult {
  CongruenceReport report;      // B_k/k = B_l/l (mod p^n)
  bool exponents_congruent = false;  // k = l (mod phi(p^n))
};

KummerResult kummer_check(std::uint64_t p, unsigned n, std::uint64_t k, std::uint64_t l);

struct AdamsValuation {
  long index_valuation = 0;      // v_p(k)
  long numerator_valuation = 0;  // v_p(numerator(B_k))
};

AdamsValuation adams_thangadurai_valuation(std::uint64_t p, std::uint64_t k);

}  // namespace eulermod
