#include "eulermod/cache.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

namespace eulermod {

namespace {

constexpr std::uint64_t kCheckPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t residue(const Rational& r) {
  const std::uint64_t num = mod_reduce(r.numerator(), kCheckPrime);
  const std::uint64_t den = mod_reduce(r.denominator(), kCheckPrime);
  return mod_mul(num, mod_inverse(static_cast<std::int64_t>(den), kCheckPrime), kCheckPrime);
}

template <typename T>
std::vector<T> contiguous(std::map<std::size_t, T>& records, char kind) {
  std::vector<T> out;
  out.reserve(records.size());
  for (auto& [index, value] : records) {
    if (index != out.size()) {
      throw CacheError(std::string("cache: ") + kind + " records are not contiguous from 0 (missing index " +
                       std::to_string(out.size()) + ")");
    }
    out.push_back(std::move(value));
  }
  return out;
}

void check_euler(const std::vector<BigInt>& e) {
  if (e.empty()) return;
  if (e[0] != 1) throw CacheError("cache: E_0 must be 1");
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (i % 2 == 1 && e[i] != 0) throw CacheError("cache: E_" + std::to_string(i) + " must be 0");
    if (i % 2 == 0 && mpz_odd_p(e[i].get_mpz_t()) == 0) {
      throw CacheError("cache: E_" + std::to_string(i) + " must be odd");
    }
  }
  // E_n + sum_{k<n, k=n mod 2} C(n,k) E_k = 0 mod P
  std::vector<std::uint64_t> res(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) res[i] = mod_reduce(e[i], kCheckPrime);
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n < e.size(); ++n) {
    row.push_back(1);
    for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % kCheckPrime;
    std::uint64_t acc = res[n];
    for (std::size_t k = n % 2; k < n; k += 2) acc = (acc + mod_mul(row[k], res[k], kCheckPrime)) % kCheckPrime;
    if (acc != 0) throw CacheError("cache: E_" + std::to_string(n) + " violates the Euler recurrence");
  }
}

void check_bernoulli(const std::vector<Rational>& b) {
  if (b.empty()) return;
  if (b[0] != Rational(1)) throw CacheError("cache: B_0 must be 1");
  if (b.size() > 1 && b[1] != Rational(BigInt(-1), BigInt(2))) throw CacheError("cache: B_1 must be -1/2");
  for (std::size_t i = 2; i < b.size(); ++i) {
    if (i % 2 == 1) {
      if (!b[i].is_zero()) throw CacheError("cache: B_" + std::to_string(i) + " must be 0");
    } else if (b[i].denominator() != von_staudt_clausen_denominator(i)) {
      throw CacheError("cache: B_" + std::to_string(i) + " has the wrong denominator");
    }
  }
  // sum_{k=0}^{n} C(n+1,k) B_k = 0 mod P
  std::vector<std::uint64_t> res(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) res[i] = residue(b[i]);
  std::vector<std::uint64_t> row{1, 1};
  for (std::size_t n = 1; n < b.size(); ++n) {
    row.push_back(1);
    for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % kCheckPrime;
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc = (acc + mod_mul(row[k], res[k], kCheckPrime)) % kCheckPrime;
    if (acc != 0) throw CacheError("cache: B_" + std::to_string(n) + " violates the Bernoulli recursion");
  }
}

}  // namespace

void write_cache(const std::filesystem::path& path, const CacheContents& contents) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CacheError("cache: cannot open '" + path.string() + "' for writing");
  for (std::size_t i = 0; i < contents.euler.size(); ++i) out << "E " << i << ' ' << contents.euler[i].get_str() << '\n';
  for (std::size_t i = 0; i < contents.bernoulli.size(); ++i) {
    out << "B " << i << ' ' << contents.bernoulli[i].to_string() << '\n';
  }
  if (!out) throw CacheError("cache: write to '" + path.string() + "' failed");
}

CacheContents read_cache(const std::filesystem::path& path, std::uint64_t seed) {
  CacheContents out;
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return out;
    throw CacheError("cache: cannot open '" + path.string() + "'");
  }
  std::map<std::size_t, BigInt> euler;
  std::map<std::size_t, Rational> bernoulli;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string kind, index_text, value_text, extra;
    fields >> kind >> index_text >> value_text;
    const std::string where = "cache line " + std::to_string(line_no);
    if (value_text.empty() || (fields >> extra) || (kind != "E" && kind != "B") ||
        index_text.find_first_not_of("0123456789") != std::string::npos) {
      throw CacheError(where + ": malformed record '" + line + "'");
    }
    const std::size_t index = std::stoull(index_text);
    try {
      if (kind == "E") {
        if (value_text.find('/') != std::string::npos) throw CacheError(where + ": Euler values are integers");
        if (!euler.emplace(index, parse_bigint(value_text)).second) throw CacheError(where + ": duplicate E index");
      } else {
        if (!bernoulli.emplace(index, Rational::parse(value_text)).second) {
          throw CacheError(where + ": duplicate B index");
        }
      }
    } catch (const DomainError& e) {
      throw CacheError(where + ": " + e.what());
    }
  }
  out.euler = contiguous(euler, 'E');
  out.bernoulli = contiguous(bernoulli, 'B');
  check_euler(out.euler);
  check_bernoulli(out.bernoulli);

  std::mt19937_64 rng(seed);
  if (!out.euler.empty()) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, out.euler.size() - 1)(rng);
    EulerNumberTable fresh;
    if (fresh.at(i) != out.euler[i]) throw CacheError("cache: tamper check failed at E_" + std::to_string(i));
  }
  if (!out.bernoulli.empty()) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, out.bernoulli.size() - 1)(rng);
    BernoulliNumberTable fresh;
    if (fresh.at(i) != out.bernoulli[i]) throw CacheError("cache: tamper check failed at B_" + std::to_string(i));
  }
  return out;
}

void save_tables(const std::filesystem::path& path, const EulerNumberTable& euler,
                 const BernoulliNumberTable& bernoulli) {
  write_cache(path, CacheContents{euler.snapshot(), bernoulli.snapshot()});
}

CacheContents load_tables(const std::filesystem::path& path, EulerNumberTable& euler,
                          BernoulliNumberTable& bernoulli, std::uint64_t seed) {
  CacheContents contents = read_cache(path, seed);
  try {
    euler.adopt(contents.euler);
    bernoulli.adopt(contents.bernoulli);
  } catch (const InternalInconsistency& e) {
    throw CacheError(std::string("cache: ") + e.what());
  }
  return contents;
}

}  // namespace eulermod
