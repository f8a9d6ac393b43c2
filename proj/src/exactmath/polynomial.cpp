#include "eulermod/exactmath/polynomial.hpp"

#include <algorithm>

#include "eulermod/errors.hpp"

namespace eulermod {

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int power) {
  if (power < 0) throw DomainError("negative monomial power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_power(const Rational& shift, int power) {
  if (power < 0) throw DomainError("negative power");
  // coefficient of x^i in (x+s)^n is C(n,i) s^(n-i)
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  Rational s_pow(1);
  BigInt binom(1);
  for (int i = power; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = Rational(binom) * s_pow;
    // step to C(n, i-1)
    binom = binom * i / (power - i + 1);
    s_pow *= shift;
  }
  return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
  // sum_i c_i (a x + b)^i, each power expanded binomially
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const int n = static_cast<int>(i);
    BigInt binom(1);
    for (int j = 0; j <= n; ++j) {
      out[static_cast<std::size_t>(j)] +=
          coeffs_[i] * Rational(binom) * pow(scale, static_cast<unsigned long>(j)) *
          pow(shift, static_cast<unsigned long>(n - j));
      binom = binom * (n - j) / (j + 1);
    }
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

}  // namespace eulermod
