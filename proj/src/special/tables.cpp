#include <mutex>
#include <string>

#include "eulermod/special.hpp"

namespace eulermod {

namespace {

std::vector<BigInt> binomial_row(std::size_t n) {
  std::vector<BigInt> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) mpz_bin_uiui(row[j].get_mpz_t(), n, j);
  return row;
}

// row C(n-1, .) -> C(n, .)
void advance_pascal_row(std::vector<BigInt>& row) {
  row.emplace_back(1);
  for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
}

}  // namespace

EulerNumberTable::EulerNumberTable() : values_{BigInt(1)}, pascal_row_{BigInt(1)} {}

BigInt EulerNumberTable::at(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
  return values_[n];
}

void EulerNumberTable::ensure(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return;
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
}

std::size_t EulerNumberTable::computed_up_to() const {
  std::shared_lock lock(mutex_);
  return values_.size() - 1;
}

std::vector<BigInt> EulerNumberTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return values_;
}

void EulerNumberTable::extend_locked(std::size_t n) {
  std::uint64_t mults = 0;
  BigInt acc;
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    advance_pascal_row(pascal_row_);
    acc = 0;
    // only k with n - k even; the odd-index entries are stored zeros
    for (std::size_t k = m % 2; k < m; k += 2) {
      if (values_[k] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), pascal_row_[k].get_mpz_t(), values_[k].get_mpz_t());
      ++mults;
    }
    values_.push_back(-acc);
  }
  multiplications_ += mults;
}

void EulerNumberTable::adopt(const std::vector<BigInt>& prefix) {
  std::unique_lock lock(mutex_);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i < values_.size()) {
      if (values_[i] != prefix[i]) {
        throw InternalInconsistency("EulerNumberTable::adopt: E_" + std::to_string(i) + " disagrees");
      }
    } else {
      values_.push_back(prefix[i]);
    }
  }
  if (pascal_row_.size() != values_.size()) pascal_row_ = binomial_row(values_.size() - 1);
}

BernoulliNumberTable::BernoulliNumberTable() : values_{Rational(1)}, pascal_row_{BigInt(1), BigInt(1)} {}

Rational BernoulliNumberTable::at(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
  return values_[n];
}

void BernoulliNumberTable::ensure(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return;
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
}

std::size_t BernoulliNumberTable::computed_up_to() const {
  std::shared_lock lock(mutex_);
  return values_.size() - 1;
}

std::vector<Rational> BernoulliNumberTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return values_;
}

void BernoulliNumberTable::extend_locked(std::size_t n) {
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    advance_pascal_row(pascal_row_);  // now C(m+1, .)
    Rational acc(0);
    for (std::size_t k = 0; k < m; ++k) {
      if (values_[k].is_zero()) continue;
      acc += Rational(pascal_row_[k]) * values_[k];
    }
    values_.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
}

void BernoulliNumberTable::adopt(const std::vector<Rational>& prefix) {
  std::unique_lock lock(mutex_);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i < values_.size()) {
      if (values_[i] != prefix[i]) {
        throw InternalInconsistency("BernoulliNumberTable::adopt: B_" + std::to_string(i) + " disagrees");
      }
    } else {
      values_.push_back(prefix[i]);
    }
  }
  if (pascal_row_.size() != values_.size() + 1) pascal_row_ = binomial_row(values_.size());
}

EulerNumberTable& shared_euler_table() {
  static EulerNumberTable table;
  return table;
}

BernoulliNumberTable& shared_bernoulli_table() {
  static BernoulliNumberTable table;
  return table;
}

BigInt euler_number(std::size_t n) { return shared_euler_table().at(n); }

Rational bernoulli_number(std::size_t n) { return shared_bernoulli_table().at(n); }

}  // namespace eulermod
