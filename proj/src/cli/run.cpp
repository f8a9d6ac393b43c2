#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "claims.hpp"
#include "eulermod/cache.hpp"
#include "eulermod/congruences.hpp"

namespace eulermod::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Parameters> expand(const ClaimSpec& spec, const std::map<std::string, std::vector<std::int64_t>>& ranges) {
  std::vector<Parameters> tuples{{}};
  for (const auto& name : spec.params) {
    const auto it = ranges.find(name);
    if (it == ranges.end()) throw UsageError("claim " + spec.name + " requires --" + name);
    std::vector<Parameters> next;
    next.reserve(tuples.size() * it->second.size());
    for (const auto& t : tuples) {
      for (const auto v : it->second) {
        Parameters p = t;
        p.emplace_back(name, v);
        next.push_back(std::move(p));
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

// Runs task(i) for i in [0, count) on up to `threads` workers.  Slot i of the
// result belongs to task i, so the merge order is independent of scheduling.
template <typename Result, typename Task>
std::vector<Result> fan_out(std::size_t count, unsigned threads, Task task) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

void emit(const std::vector<CheckRecord>& records, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) out << csv_header() << '\n';
  for (const auto& r : records) {
    switch (format) {
      case OutputFormat::kJson: out << to_json_line(r) << '\n'; break;
      case OutputFormat::kCsv: out << to_csv_line(r) << '\n'; break;
      case OutputFormat::kPlain: out << to_plain_line(r) << '\n'; break;
    }
  }
}

int status_of(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.holds; }) ? kExitOk
                                                                                                   : kExitCheckFailed;
}

std::int64_t single(const RunConfig& config, const std::string& name) {
  const auto it = config.ranges.find(name);
  if (it == config.ranges.end() || it->second.size() != 1) throw UsageError("--" + name + " takes a single integer");
  return it->second.front();
}

void print_value(const RunConfig& config, std::ostream& out, const std::string& command,
                 const std::vector<std::pair<std::string, std::string>>& fields, const std::string& value) {
  switch (config.format) {
    case OutputFormat::kPlain: out << value << '\n'; break;
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["command"] = command;
      for (const auto& [k, v] : fields) j[k] = v;
      j["value"] = value;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      std::string header = "command", row = command;
      for (const auto& [k, v] : fields) {
        header += "," + k;
        row += "," + v;
      }
      out << header << ",value\n" << row << ',' << value << '\n';
      break;
    }
  }
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kEuler: {
      const auto k = config.positional.at(0);
      if (k < 0) throw UsageError("euler: K must be >= 0");
      const BigInt e = euler_number(static_cast<std::size_t>(k));
      if (const auto it = config.ranges.find("mod"); it != config.ranges.end()) {
        const auto m = single(config, "mod");
        if (m < 1) throw UsageError("euler: --mod must be >= 1");
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), BigInt(static_cast<long>(m)).get_mpz_t());
        print_value(config, out, "euler", {{"k", std::to_string(k)}, {"mod", std::to_string(m)}}, r.get_str());
      } else {
        print_value(config, out, "euler", {{"k", std::to_string(k)}}, e.get_str());
      }
      return kExitOk;
    }
    case Command::kBernoulli: {
      const auto k = config.positional.at(0);
      if (k < 0) throw UsageError("bernoulli: K must be >= 0");
      print_value(config, out, "bernoulli", {{"k", std::to_string(k)}},
                  bernoulli_number(static_cast<std::size_t>(k)).to_string());
      return kExitOk;
    }
    case Command::kEulerMod2: {
      const auto k = config.positional.at(0);
      const auto n = config.positional.at(1);
      if (k < 0 || k % 2 != 0) throw UsageError("euler-mod2: K must be even and >= 0");
      if (n < 1 || n > 40) throw UsageError("euler-mod2: N must lie in [1, 40]");
      const auto r = euler_mod_2n(static_cast<std::uint64_t>(k), static_cast<unsigned>(n));
      print_value(config, out, "euler-mod2", {{"k", std::to_string(k)}, {"n", std::to_string(n)}}, std::to_string(r));
      return kExitOk;
    }
    case Command::kCheck: {
      const auto records = run_check(config);
      emit(records, config.format, out);
      if (records.empty()) err << "no admissible parameter tuples\n";
      return status_of(records);
    }
    case Command::kSweep: {
      const auto kmax = single(config, "kmax");
      if (kmax < 0 || kmax > 100000) throw UsageError("sweep: --kmax must lie in [0, 100000]");
      const auto records = run_stern_sweep(static_cast<std::uint64_t>(kmax), config.parallelism);
      emit(records, config.format, out);
      return status_of(records);
    }
    case Command::kSternTable: {
      const auto n = single(config, "n");
      if (n < 1 || n > 20) throw UsageError("stern-table: --n must lie in [1, 20]");
      const std::uint64_t count = std::uint64_t{1} << (n - 1);  // even k in [0, 2^n - 2]
      const auto residues = fan_out<std::uint64_t>(count, config.parallelism, [n](std::size_t i) {
        return euler_mod_2n(2 * i, static_cast<unsigned>(n));
      });
      if (config.format == OutputFormat::kCsv) out << "k,residue\n";
      for (std::size_t i = 0; i < residues.size(); ++i) {
        switch (config.format) {
          case OutputFormat::kPlain: out << 2 * i << ' ' << residues[i] << '\n'; break;
          case OutputFormat::kCsv: out << 2 * i << ',' << residues[i] << '\n'; break;
          case OutputFormat::kJson:
            out << nlohmann::ordered_json{{"k", 2 * i}, {"n", n}, {"residue", residues[i]}}.dump() << '\n';
            break;
        }
      }
      return kExitOk;
    }
    case Command::kBench: {
      const auto k = single(config, "k");
      const auto n = single(config, "n");
      if (k < 0 || k % 2 != 0) throw UsageError("bench: --k must be even and >= 0");
      if (n < 1 || n > 30) throw UsageError("bench: --n must lie in [1, 30]");
      const BenchReport r = bench_report(static_cast<std::uint64_t>(k), static_cast<unsigned>(n), config.bench_cutoff);
      nlohmann::ordered_json j{{"k", r.k},
                               {"n", r.n},
                               {"fast_residue", r.fast_residue},
                               {"fast_seconds", r.fast_seconds},
                               {"fast_terms", r.fast_terms},
                               {"fast_modular_multiplications", r.fast_modular_multiplications},
                               {"exact_ran", r.exact_ran},
                               {"exact_residue", r.exact_ran ? nlohmann::ordered_json(r.exact_residue) : nullptr},
                               {"exact_seconds", r.exact_ran ? nlohmann::ordered_json(r.exact_seconds) : nullptr},
                               {"exact_bigint_multiplications", r.exact_bigint_multiplications},
                               {"agree", r.agree}};
      if (config.format == OutputFormat::kJson) {
        out << j.dump() << '\n';
      } else if (config.format == OutputFormat::kCsv) {
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
          header += (header.empty() ? "" : ",") + it.key();
          row += (row.empty() ? "" : ",") + (it->is_null() ? std::string() : it->dump());
        }
        out << header << '\n' << row << '\n';
      } else {
        out << "fast  E_" << r.k << " mod 2^" << r.n << " = " << r.fast_residue << "  (" << r.fast_seconds << " s, "
            << r.fast_terms << " terms, " << r.fast_modular_multiplications << " modular multiplications)\n";
        if (r.exact_ran) {
          out << "exact E_" << r.k << " mod 2^" << r.n << " = " << r.exact_residue << "  (" << r.exact_seconds
              << " s, " << r.exact_bigint_multiplications << " big-integer multiplications)\n";
          out << (r.agree ? "agree\n" : "DISAGREE\n");
        } else {
          out << "exact path skipped (k > cutoff " << config.bench_cutoff << ")\n";
        }
      }
      return r.agree ? kExitOk : kExitCheckFailed;
    }
  }
  return kExitUsage;
}

}  // namespace

std::vector<CheckRecord> run_check(const RunConfig& config) {
  const ClaimSpec* spec = find_claim(config.claim);
  if (spec == nullptr) throw UsageError("unknown claim '" + config.claim + "'");
  const auto tuples = expand(*spec, config.ranges);
  for (const auto& t : tuples) {
    for (const auto& [name, value] : t) spec->validate(name, value);
  }
  // extend the shared tables once, before any worker reads them
  std::int64_t max_e = -1, max_b = -1;
  for (const auto& t : tuples) {
    const auto [e, b] = spec->table_needs(t);
    max_e = std::max(max_e, e);
    max_b = std::max(max_b, b);
  }
  if (max_e >= 0) shared_euler_table().ensure(static_cast<std::size_t>(max_e));
  if (max_b >= 0) shared_bernoulli_table().ensure(static_cast<std::size_t>(max_b));

  auto slots = fan_out<std::optional<CheckRecord>>(tuples.size(), config.parallelism,
                                                   [&](std::size_t i) { return spec->evaluate(tuples[i]); });
  std::vector<CheckRecord> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<CheckRecord> run_stern_sweep(std::uint64_t kmax, unsigned parallelism) {
  shared_euler_table().ensure(kmax);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t k = 2; k <= kmax; k += 2) {
    for (std::uint64_t l = 0; l < k; l += 2) pairs.emplace_back(k, l);
  }
  return fan_out<CheckRecord>(pairs.size(), parallelism, [&](std::size_t i) {
    const auto [k, l] = pairs[i];
    const ValuationRecord v = stern_valuation(k, l);
    CheckRecord rec;
    rec.claim = "stern";
    rec.parameters = {{"k", static_cast<std::int64_t>(k)}, {"l", static_cast<std::int64_t>(l)}};
    rec.holds = v.v_value == v.v_index;
    rec.lhs = std::to_string(v.v_value);
    rec.rhs = std::to_string(v.v_index);
    return rec;
  });
}

BenchReport bench_report(std::uint64_t k, unsigned n, std::uint64_t cutoff) {
  if (k % 2 != 0) throw DomainError("bench_report: k must be even");
  BenchReport r;
  r.k = k;
  r.n = n;
  FastPathStats stats;
  auto start = Clock::now();
  r.fast_residue = euler_mod_2n(k, n, &stats);
  r.fast_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.fast_terms = stats.terms;
  r.fast_modular_multiplications = stats.modular_multiplications;
  if (k <= cutoff) {
    EulerNumberTable fresh;
    start = Clock::now();
    const BigInt e = fresh.at(k);
    r.exact_residue = mod_reduce(e, std::uint64_t{1} << n);
    r.exact_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.exact_bigint_multiplications = fresh.multiplications();
    r.exact_ran = true;
    r.agree = r.exact_residue == r.fast_residue;
  }
  return r;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.cache_path) load_tables(*config.cache_path, shared_euler_table(), shared_bernoulli_table());
  } catch (const CacheError& e) {
    err << e.what() << '\n';
    return kExitCacheRefused;
  }
  int status = kExitOk;
  try {
    status = run_command(config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalInconsistency& e) {
    nlohmann::ordered_json j{{"error", "internal-inconsistency"}, {"detail", e.what()}};
    out << j.dump() << '\n';
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistency;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (config.cache_path) {
    try {
      save_tables(*config.cache_path, shared_euler_table(), shared_bernoulli_table());
    } catch (const CacheError& e) {
      err << "warning: " << e.what() << '\n';
    }
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace eulermod::cli
