#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "claims.hpp"
#include "eulermod/cli.hpp"

namespace eulermod::cli {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t v = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || text.empty()) throw UsageError("malformed range '" + whole + "'");
  return v;
}

// range-valued flags; values may start with '-'
const std::vector<std::string> kRangeFlags = {"a", "k", "l", "m", "n", "p", "q", "t", "kmax"};

}  // namespace

std::vector<std::int64_t> parse_range(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string_view rest(text);
  if (rest.empty()) throw UsageError("empty range");
  while (true) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    int parity = -1;  // -1 any, 0 even, 1 odd
    if (item.ends_with("odd")) {
      parity = 1;
      item.remove_suffix(3);
    } else if (item.ends_with("even")) {
      parity = 0;
      item.remove_suffix(4);
    }
    const auto dots = item.find("..");
    std::int64_t lo = 0, hi = 0;
    if (dots == std::string_view::npos) {
      lo = hi = parse_int(item, text);
    } else {
      lo = parse_int(item.substr(0, dots), text);
      hi = parse_int(item.substr(dots + 2), text);
    }
    if (lo > hi) throw UsageError("empty range '" + text + "' (lower bound exceeds upper)");
    if (hi - lo > 10'000'000) throw UsageError("range '" + text + "' is too large");
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (parity == -1 || ((v % 2 + 2) % 2) == parity) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("range '" + text + "' selects no values");
  return out;
}

RunConfig parse_args(int argc, const char* const* argv) {
  // fold "--a -10..10" into "--a=-10..10" so negative bounds are not read as flags
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.starts_with("--") && i + 1 < argc) {
      const std::string name = arg.substr(2);
      const std::string next = argv[i + 1];
      const bool is_range_flag = std::find(kRangeFlags.begin(), kRangeFlags.end(), name) != kRangeFlags.end() ||
                                 name == "mod";
      if (is_range_flag && next.size() > 1 && next[0] == '-' && std::isdigit(static_cast<unsigned char>(next[1]))) {
        arg += "=" + next;
        ++i;
      }
    }
    args.push_back(std::move(arg));
  }
  std::reverse(args.begin(), args.end());

  CLI::App app{"Exact Euler/Bernoulli numbers and their congruences modulo powers of two", "eulermod"};
  app.require_subcommand(1);
  std::string format = "plain";
  std::string cache;
  unsigned jobs = 1;
  app.add_option("--format", format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--cache", cache, std::string("number-table cache file (default $") + kCacheEnvVar + ")");
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1u, 256u));

  RunConfig config;
  std::vector<std::string> positional;
  std::map<std::string, std::string> raw_ranges;

  auto* euler = app.add_subcommand("euler", "print E_K, optionally reduced mod M");
  euler->add_option("K", positional, "index")->required()->expected(1);
  euler->add_option("--mod", raw_ranges["mod"], "modulus M >= 1");

  auto* bernoulli = app.add_subcommand("bernoulli", "print B_K");
  bernoulli->add_option("K", positional, "index")->required()->expected(1);

  auto* euler_mod2 = app.add_subcommand("euler-mod2", "E_K mod 2^N by the modular fast path (K even)");
  euler_mod2->add_option("values", positional, "K (even) and N")->required()->expected(2);

  auto* check = app.add_subcommand("check", "verify a claim over parameter ranges");
  check->add_option("claim", config.claim, "claim id")->required();
  for (const std::string name : {"a", "k", "l", "m", "n", "p", "q", "t"}) {
    check->add_option("--" + name, raw_ranges[name], "range for " + name);
  }

  auto* sweep = app.add_subcommand("sweep", "2-adic valuation table of E_k - E_l");
  sweep->add_option("target", config.claim, "sweep target")->required()->check(CLI::IsMember({"stern"}));
  sweep->add_option("--kmax", raw_ranges["kmax"], "largest index")->required();

  auto* stern_table = app.add_subcommand("stern-table", "E_k mod 2^N for even k < 2^N by the fast path");
  stern_table->add_option("--n", raw_ranges["table_n"], "exponent N")->required();

  auto* bench = app.add_subcommand("bench", "fast path versus exact recurrence");
  bench->add_option("--k", raw_ranges["bench_k"], "even index")->required();
  bench->add_option("--n", raw_ranges["bench_n"], "exponent")->required();
  bench->add_option("--cutoff", config.bench_cutoff, "largest k for the exact path");

  for (auto* sub : {euler, bernoulli, euler_mod2, check, sweep, stern_table, bench}) sub->fallthrough();

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (euler->parsed()) config.command = Command::kEuler;
  if (bernoulli->parsed()) config.command = Command::kBernoulli;
  if (euler_mod2->parsed()) config.command = Command::kEulerMod2;
  if (check->parsed()) config.command = Command::kCheck;
  if (sweep->parsed()) config.command = Command::kSweep;
  if (stern_table->parsed()) config.command = Command::kSternTable;
  if (bench->parsed()) config.command = Command::kBench;

  for (const auto& p : positional) config.positional.push_back(parse_int(p, p));
  for (const auto& [name, text] : raw_ranges) {
    if (text.empty()) continue;
    std::string key = name;
    if (name == "table_n" || name == "bench_n") key = "n";
    if (name == "bench_k") key = "k";
    config.ranges[key] = parse_range(text);
  }

  config.format = format == "json" ? OutputFormat::kJson : (format == "csv" ? OutputFormat::kCsv : OutputFormat::kPlain);
  config.parallelism = jobs;
  if (!cache.empty()) {
    config.cache_path = cache;
  } else if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') {
    config.cache_path = env;
  }

  if (config.command == Command::kCheck) {
    const ClaimSpec* spec = find_claim(config.claim);
    if (spec == nullptr) throw UsageError("unknown claim '" + config.claim + "'");
    for (const auto& [name, values] : config.ranges) {
      if (std::find(spec->params.begin(), spec->params.end(), name) == spec->params.end()) {
        throw UsageError("claim " + config.claim + " does not take --" + name);
      }
    }
    // validate every value up front, before any computation
    for (const auto& name : spec->params) {
      const auto it = config.ranges.find(name);
      if (it == config.ranges.end()) throw UsageError("claim " + config.claim + " requires --" + name);
      for (const auto v : it->second) spec->validate(name, v);
    }
  }
  return config;
}

}  // namespace eulermod::cli
