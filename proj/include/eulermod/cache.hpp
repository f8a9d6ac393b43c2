#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "eulermod/special.hpp"

namespace eulermod {

/// Number-table cache file.
///
/// One record per line, `<kind> <index> <numerator>[/<denominator>]`, kinds
/// `E` (integer values) and `B` (rationals).  Each kind must cover a
/// contiguous prefix 0..N.  Blank lines are ignored.
struct CacheContents {
  std::vector<BigInt> euler;
  std::vector<Rational> bernoulli;
};

void write_cache(const std::filesystem::path& path, const CacheContents& contents);

/// Reads and validates a cache.  A missing or empty file yields empty tables.
///
/// Validation: record syntax and index contiguity; E_0 = 1 and B_0 = 1;
/// parity and vanishing of odd entries; von Staudt-Clausen denominators;
/// both defining recurrences modulo the prime 2^61 - 1 over the whole
/// prefix; and exact re-derivation of one randomly chosen index per kind
/// (chosen from `seed`).  Any failure throws CacheError.
CacheContents read_cache(const std::filesystem::path& path, std::uint64_t seed = 0x5eed);

/// Snapshot both tables into a file.
void save_tables(const std::filesystem::path& path, const EulerNumberTable& euler,
                 const BernoulliNumberTable& bernoulli);

/// Reads a cache and installs it into the tables.  Returns the contents.
CacheContents load_tables(const std::filesystem::path& path, EulerNumberTable& euler,
                          BernoulliNumberTable& bernoulli, std::uint64_t seed = 0x5eed);

}  // namespace eulermod
