#include "eulermod/congruences.hpp"

namespace eulermod {

QAdicContext::QAdicContext(BigInt q) : q_(std::move(q)) {
  if (q_ <= 1) throw DomainError("QAdicContext: q must exceed 1, got " + q_.get_str());
}

bool is_q_integer(const Rational& x, const QAdicContext& ctx) {
  BigInt g;
  const BigInt den = x.denominator();
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), ctx.q().get_mpz_t());
  return g == 1;
}

CongruenceReport congruent_mod(const Rational& x, const Rational& y, const QAdicContext& ctx) {
  if (!is_q_integer(x, ctx)) throw DomainError("congruent_mod: " + x.to_string() + " is not a " + ctx.q().get_str() + "-integer");
  if (!is_q_integer(y, ctx)) throw DomainError("congruent_mod: " + y.to_string() + " is not a " + ctx.q().get_str() + "-integer");

  CongruenceReport report;
  report.lhs = x;
  report.rhs = y;
  report.modulus = ctx.q();
  const Rational diff = x - y;
  report.quotient_witness = diff / Rational(ctx.q());
  const bool by_witness = is_q_integer(report.quotient_witness, ctx);

  // numerator * denominator^-1 mod q; the denominator is a unit mod q
  BigInt inv, reduced;
  const BigInt num = diff.numerator();
  const BigInt den = diff.denominator();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx.q().get_mpz_t()) == 0) {
    throw InternalInconsistency("congruent_mod: denominator " + den.get_str() + " not invertible mod " +
                                ctx.q().get_str());
  }
  reduced = num * inv;
  mpz_fdiv_r(reduced.get_mpz_t(), reduced.get_mpz_t(), ctx.q().get_mpz_t());
  const bool by_residue = reduced == 0;

  if (by_witness != by_residue) {
    throw InternalInconsistency("congruent_mod: witness and residue routes disagree for " + x.to_string() + " vs " +
                                y.to_string() + " mod " + ctx.q().get_str());
  }
  report.holds = by_witness;
  return report;
}

bool poly_congruent_mod(const Polynomial& p, const Polynomial& q, const QAdicContext& ctx) {
  const int top = std::max(p.degree(), q.degree());
  for (int i = 0; i <= top; ++i) {
    const Rational a = p.coefficient(i);
    const Rational b = q.coefficient(i);
    if (!is_q_integer(a, ctx) || !is_q_integer(b, ctx)) {
      throw DomainError("poly_congruent_mod: coefficient of x^" + std::to_string(i) + " is not a " +
                        ctx.q().get_str() + "-integer");
    }
  }
  for (int i = 0; i <= top; ++i) {
    if (!congruent_mod(p.coefficient(i), q.coefficient(i), ctx).holds) return false;
  }
  return true;
}

}  // namespace eulermod
