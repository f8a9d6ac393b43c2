#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "eulermod/exactmath/rational.hpp"

namespace eulermod {

/// Dense univariate polynomial over Q.  coefficient(i) multiplies x^i.
///
/// Storage is trimmed so that the top stored coefficient is nonzero; the zero
/// polynomial stores nothing and reports degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c * x^power
  static Polynomial monomial(const Rational& c, int power);
  /// (x + shift)^power expanded by the binomial theorem.
  static Polynomial shifted_power(const Rational& shift, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }

  /// Zero above degree().
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  /// P(scale * x + shift), expanded exactly.
  Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace eulermod
