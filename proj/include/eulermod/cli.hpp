#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulermod::cli {

/// Bad flags, malformed ranges, or a range that violates a precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInconsistency = 3,
  kExitCacheRefused = 4,
};

enum class Command { kEuler, kBernoulli, kEulerMod2, kCheck, kSweep, kSternTable, kBench };
enum class OutputFormat { kPlain, kJson, kCsv };

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "EULERMOD_CACHE";

/// Range syntax: comma-separated items, each `v` or `lo..hi` with an optional
/// `odd`/`even` suffix, e.g. `1..15odd`, `2,4,6,8,16`, `-10..10`.
std::vector<std::int64_t> parse_range(const std::string& text);

struct RunConfig {
  Command command = Command::kEuler;
  /// Claim for `check` ("1.1", "2.4", "kummer", ...) or target for `sweep`.
  std::string claim;
  /// Positional integers (`euler K`, `euler-mod2 K N`, ...).
  std::vector<std::int64_t> positional;
  /// Named ranges keyed by flag name without dashes ("k", "q", "kmax", ...).
  std::map<std::string, std::vector<std::int64_t>> ranges;
  OutputFormat format = OutputFormat::kPlain;
  std::optional<std::filesystem::path> cache_path;
  unsigned parallelism = 1;
  std::uint64_t bench_cutoff = 5000;
};

/// Parses argv into a RunConfig.  Throws UsageError.  The cache path falls
/// back to $EULERMOD_CACHE when --cache is absent.
RunConfig parse_args(int argc, const char* const* argv);

/// One verified claim instance, printed as a line of JSON, CSV or text.
struct CheckRecord {
  std::string claim;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  bool holds = false;
  std::optional<std::string> modulus;  // absent for exact identities
  std::string lhs;
  std::string rhs;
  std::optional<std::string> witness;
  std::vector<std::pair<std::string, std::string>> extra;
};

std::string to_json_line(const CheckRecord& record);
std::string csv_header();
std::string to_csv_line(const CheckRecord& record);
std::string to_plain_line(const CheckRecord& record);

/// Evaluates one claim at one parameter tuple.  Inter-parameter conditions
/// that make the tuple inadmissible (gcd(m, q) != 1, (p-1) | k, ...) yield
/// nullopt; checker-level inconsistencies propagate as exceptions.
std::optional<CheckRecord> evaluate_claim(const std::string& claim,
                                          const std::vector<std::pair<std::string, std::int64_t>>& parameters);

/// Expands the claim's ranges into parameter tuples and evaluates them on
/// `parallelism` threads.  Output order is the tuple order regardless of the
/// thread count.
std::vector<CheckRecord> run_check(const RunConfig& config);

/// All records of the valuation sweep over even 0 <= l < k <= kmax.
std::vector<CheckRecord> run_stern_sweep(std::uint64_t kmax, unsigned parallelism);

struct BenchReport {
  std::uint64_t k = 0;
  unsigned n = 0;
  std::uint64_t fast_residue = 0;
  double fast_seconds = 0;
  std::uint64_t fast_terms = 0;
  std::uint64_t fast_modular_multiplications = 0;
  bool exact_ran = false;
  std::uint64_t exact_residue = 0;
  double exact_seconds = 0;
  std::uint64_t exact_bigint_multiplications = 0;
  bool agree = true;  // vacuously true when the exact path was skipped
};

/// Times euler_mod_2n(k, n) against the exact recurrence on a fresh table.
/// The exact path only runs for k <= cutoff.
BenchReport bench_report(std::uint64_t k, unsigned n, std::uint64_t cutoff = 5000);

/// Runs a command and writes its report to `out`, diagnostics to `err`.
/// Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulermod::cli
