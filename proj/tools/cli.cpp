#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monomialis/betti.hpp"
#include "monomialis/bhh.hpp"
#include "monomialis/cache.hpp"
#include "monomialis/decomposition.hpp"
#include "monomialis/errors.hpp"
#include "monomialis/ggood.hpp"
#include "monomialis/version.hpp"

namespace monomialis {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitPrecondition = 4;

struct CliOptions {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  bool verify_cache = false;
  long long budget_seconds = 600;

  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  bool saw_mismatch = false;
  bool saw_capacity = false;

  int exit_code() const {
    if (saw_mismatch) return kExitMismatch;
    if (saw_capacity) return kExitCapacity;
    return kExitOk;
  }
};

std::string resolve_cache_dir(const CliOptions& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("MONOMIALIS_CACHE"); env && *env) return env;
  return ".monomialis-cache";
}

DecompositionLimits budget_limits(const CliOptions& opt) {
  DecompositionLimits limits;
  if (opt.budget_seconds > 0)
    limits.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(opt.budget_seconds);
  return limits;
}

// Computes through the cache: returns the cached JSON when present (verifying
// it against a fresh run under --verify-cache), otherwise computes and
// stores.  The compute callback may throw BudgetError/CapacityError.
template <typename Compute>
nlohmann::json cached_json(CliOptions& opt, const std::string& key, Compute&& compute) {
  if (opt.no_cache) return compute();
  ResultCache cache(resolve_cache_dir(opt));
  if (auto hit = cache.get(key)) {
    if (opt.verify_cache) {
      nlohmann::json fresh = compute();
      if (fresh.dump() != hit->dump()) {
        *opt.err << "cache verification failed for key: " << key << "\n";
        opt.saw_mismatch = true;
      }
    }
    return *hit;
  }
  nlohmann::json fresh = compute();
  cache.put(key, fresh);
  return fresh;
}

nlohmann::json ass_result_json(const BHHParams& p, long long n, const DecompositionLimits& limits) {
  const auto primes = associated_primes(power(build_bhh(p), static_cast<unsigned>(n)), limits);
  int with_c = 0;
  for (const auto& prime : primes)
    if (prime.contains(p.registry->c_var(1))) ++with_c;
  nlohmann::json j;
  j["associated_primes"] = primes_to_json(primes);
  j["count"] = primes.size();
  j["count_containing_c"] = with_c;
  return j;
}

nlohmann::json cached_ass(CliOptions& opt, const BHHParams& p, long long n) {
  const std::string key = ResultCache::make_key("ass", p.m, p.r, p.s, 1, n);
  return cached_json(opt, key, [&] { return ass_result_json(p, n, budget_limits(opt)); });
}

std::string prime_names_to_text(const nlohmann::json& names) {
  std::string out = "(";
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k > 0) out += ", ";
    out += names[k].get<std::string>();
  }
  out += ")";
  return out;
}

bool prime_json_has_c(const BHHParams& p, const nlohmann::json& names) {
  const std::string c1 = p.registry->name(p.registry->c_var(1));
  for (const auto& name : names)
    if (name.get<std::string>() == c1) return true;
  return false;
}

// ---------------------------------------------------------------- ass ------

struct AssArgs {
  int m = 1, r = 2, s = 1;
  long long n = 1;
  bool containing_c = false;
  bool c_free = false;
  bool total = false;
};

int cmd_ass(CliOptions& opt, const AssArgs& args) {
  const BHHParams p = BHHParams::make(args.m, args.r, args.s);
  nlohmann::json result;
  try {
    result = cached_ass(opt, p, args.n);
  } catch (const BudgetError& e) {
    *opt.err << "budget exceeded: " << e.what() << "\n";
    opt.saw_capacity = true;
    return opt.exit_code();
  } catch (const CapacityError& e) {
    *opt.err << "capacity exceeded: " << e.what() << "\n";
    opt.saw_capacity = true;
    return opt.exit_code();
  }

  const auto& primes = result["associated_primes"];
  const long long with_c = result["count_containing_c"].get<long long>();
  const long long total_count = result["count"].get<long long>();
  const BigInt formula_c = countc(args.m, args.r, args.n);
  const std::optional<BigInt> formula_total =
      args.r == 2 ? std::optional<BigInt>(total_count_r2(args.m, args.n)) : std::nullopt;

  const bool c_match = formula_c == with_c;
  const bool total_match = !formula_total || *formula_total == total_count;
  if (!c_match || !total_match) opt.saw_mismatch = true;

  std::ostream& out = *opt.out;
  if (opt.format == "json") {
    nlohmann::json j;
    j["params"] = p.to_json();
    j["n"] = args.n;
    j["associated_primes"] = primes;
    j["count"] = total_count;
    j["count_containing_c"] = with_c;
    j["formula_containing_c"] = formula_c.str();
    if (formula_total) j["formula_total"] = formula_total->str();
    j["verdict"] = (c_match && total_match) ? "MATCH" : "MISMATCH";
    out << j.dump(2) << "\n";
    return opt.exit_code();
  }
  if (opt.format == "csv") {
    CountProfile oracle{args.m, args.r, args.s, "oracle", {{args.n, BigInt(with_c)}}};
    CountProfile formula{args.m, args.r, args.s, "formula", {{args.n, formula_c}}};
    out << oracle.to_csv();
    std::istringstream rows(formula.to_csv());
    std::string line;
    std::getline(rows, line); // skip the duplicate header
    while (std::getline(rows, line)) out << line << "\n";
    return opt.exit_code();
  }

  out << "Ass(BHH(" << args.m << "," << args.r << "," << args.s << ")^" << args.n
      << "): " << total_count << " primes\n";
  for (const auto& names : primes) {
    const bool has_c = prime_json_has_c(p, names);
    if (args.containing_c && !has_c) continue;
    if (args.c_free && has_c) continue;
    out << "  " << prime_names_to_text(names) << "\n";
  }
  out << "containing c: " << with_c << "  formula: " << formula_c.str() << "  "
      << (c_match ? "MATCH" : "MISMATCH") << "\n";
  if (args.total) {
    out << "total: " << total_count << "  formula: "
        << (formula_total ? formula_total->str() : std::string("n/a")) << "  "
        << (total_match ? "MATCH" : "MISMATCH") << "\n";
  }
  return opt.exit_code();
}

// -------------------------------------------------------------- table ------

struct TableArgs {
  int r = 2;
  int m_max = 6;
  long long n_max = 14;
  std::string source = "formula";
};

struct TableCell {
  std::optional<BigInt> value; // empty when the budget/capacity was exceeded
};

std::vector<std::vector<TableCell>> formula_grid(const TableArgs& args) {
  std::vector<std::vector<TableCell>> grid;
  for (int m = 1; m <= args.m_max; ++m) {
    std::vector<TableCell> row;
    for (long long n = 1; n <= args.n_max; ++n) row.push_back({countc(m, args.r, n)});
    grid.push_back(std::move(row));
  }
  return grid;
}

std::vector<std::vector<TableCell>> oracle_grid(CliOptions& opt, const TableArgs& args) {
  std::vector<std::vector<TableCell>> grid;
  for (int m = 1; m <= args.m_max; ++m) {
    const BHHParams p = BHHParams::make(m, args.r, 1);
    std::vector<TableCell> row;
    for (long long n = 1; n <= args.n_max; ++n) {
      try {
        nlohmann::json cell = cached_ass(opt, p, n);
        row.push_back({BigInt(cell["count_containing_c"].get<long long>())});
      } catch (const BudgetError&) {
        opt.saw_capacity = true;
        row.push_back({});
      } catch (const CapacityError&) {
        opt.saw_capacity = true;
        row.push_back({});
      }
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

void print_grid(std::ostream& out, const TableArgs& args,
                const std::vector<std::vector<TableCell>>& grid, bool markdown) {
  const std::string sep = markdown ? " | " : "  ";
  out << (markdown ? "| m\\n" : "m\\n");
  for (long long n = 1; n <= args.n_max; ++n) out << sep << n;
  if (markdown) out << " |";
  out << "\n";
  if (markdown) {
    out << "|---";
    for (long long n = 1; n <= args.n_max; ++n) out << "|---";
    out << "|\n";
  }
  for (int m = 1; m <= args.m_max; ++m) {
    out << (markdown ? "| " : "") << m;
    for (const auto& cell : grid[static_cast<std::size_t>(m - 1)])
      out << sep << (cell.value ? cell.value->str() : std::string("?"));
    if (markdown) out << " |";
    out << "\n";
  }
}

int cmd_table(CliOptions& opt, const TableArgs& args) {
  if (args.r < 2) throw PreconditionError("r must be >= 2");
  std::ostream& out = *opt.out;

  std::vector<std::vector<TableCell>> formula;
  std::vector<std::vector<TableCell>> oracle;
  if (args.source == "formula" || args.source == "both") formula = formula_grid(args);
  if (args.source == "oracle" || args.source == "both") oracle = oracle_grid(opt, args);
  const auto& primary = args.source == "oracle" ? oracle : formula;

  if (opt.format == "csv") {
    out << "m,r,s,n,count,source\n";
    auto emit = [&](const std::vector<std::vector<TableCell>>& grid, const std::string& source) {
      for (int m = 1; m <= args.m_max; ++m)
        for (long long n = 1; n <= args.n_max; ++n) {
          const auto& cell = grid[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)];
          out << m << "," << args.r << ",1," << n << ","
              << (cell.value ? cell.value->str() : std::string("?")) << "," << source << "\n";
        }
    };
    if (!formula.empty()) emit(formula, "formula");
    if (!oracle.empty()) emit(oracle, "oracle");
  } else if (opt.format == "json") {
    nlohmann::json j;
    j["r"] = args.r;
    j["m_max"] = args.m_max;
    j["n_max"] = args.n_max;
    j["source"] = args.source;
    auto grid_json = [&](const std::vector<std::vector<TableCell>>& grid) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : grid) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& cell : row)
          cells.push_back(cell.value ? nlohmann::json(cell.value->str()) : nlohmann::json());
        rows.push_back(std::move(cells));
      }
      return rows;
    };
    if (!formula.empty()) j["formula"] = grid_json(formula);
    if (!oracle.empty()) j["oracle"] = grid_json(oracle);
    out << j.dump(2) << "\n";
  } else {
    out << "counts of associated primes containing c, r = " << args.r << ", source = "
        << args.source << "\n";
    print_grid(out, args, primary, opt.format == "md");
  }

  if (args.source == "both") {
    std::vector<std::string> mismatches;
    int skipped = 0;
    for (int m = 1; m <= args.m_max; ++m)
      for (long long n = 1; n <= args.n_max; ++n) {
        const auto& o = oracle[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)];
        const auto& f = formula[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)];
        if (!o.value) {
          ++skipped;
          continue;
        }
        if (*o.value != *f.value)
          mismatches.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " formula=" + f.value->str() + " oracle=" + o.value->str());
      }
    if (mismatches.empty()) {
      out << "mismatches: none";
      if (skipped > 0) out << " (" << skipped << " cells over budget, not compared)";
      out << "\n";
    } else {
      opt.saw_mismatch = true;
      out << "mismatches:\n";
      for (const auto& line : mismatches) out << "  " << line << "\n";
    }
  }
  return opt.exit_code();
}

// -------------------------------------------------------------- depth ------

struct DepthArgs {
  int m = 1, r = 2, s = 1, e = 1;
  long long n_max = 6;
  std::string strategy = "formula";
};

int cmd_depth(CliOptions& opt, const DepthArgs& args) {
  const BHHParams p = BHHParams::make(args.m, args.r, args.s);
  DepthStrategy strategy = DepthStrategy::kFormula;
  if (args.strategy == "betti") strategy = DepthStrategy::kBetti;
  else if (args.strategy == "zero-detect") strategy = DepthStrategy::kZeroDetect;
  else if (args.strategy != "formula") throw PreconditionError("unknown strategy: " + args.strategy);

  DepthProfile profile;
  if (strategy == DepthStrategy::kFormula) {
    profile = depth_profile(p, args.e, args.n_max, strategy);
  } else {
    // Cache row by row so interrupted profiles resume cheaply.
    profile.m = p.m;
    profile.r = p.r;
    profile.s = p.s;
    profile.e = args.e;
    profile.strategy = strategy;
    profile.periodic_window_end = static_cast<long long>(p.r) * p.m + 1;
    for (int u = 0; u <= p.m; ++u)
      profile.minima.push_back(static_cast<long long>(p.r) * u + 1);
    const std::string kind = strategy == DepthStrategy::kBetti ? "betti-depth" : "depth0";
    for (long long n = 1; n <= args.n_max; ++n) {
      DepthProfileRow row;
      row.n = n;
      const std::string key = ResultCache::make_key(kind, p.m, p.r, p.s, args.e, n);
      try {
        nlohmann::json cell = cached_json(opt, key, [&]() -> nlohmann::json {
          const MonomialIdeal base = args.e == 1 ? build_bhh(p) : split_ideal(p, args.e);
          const MonomialIdeal In = power(base, static_cast<unsigned>(n));
          if (strategy == DepthStrategy::kBetti)
            return nlohmann::json{{"depth", depth(In)}};
          return nlohmann::json{{"zero", depth_zero(In, budget_limits(opt))}};
        });
        if (strategy == DepthStrategy::kBetti) row.depth = cell["depth"].get<int>();
        else row.is_zero = cell["zero"].get<bool>();
      } catch (const CapacityError& e) {
        row.error = e.what();
        opt.saw_capacity = true;
      } catch (const BudgetError& e) {
        row.error = e.what();
        opt.saw_capacity = true;
      }
      profile.rows.push_back(std::move(row));
    }
  }

  std::ostream& out = *opt.out;
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : profile.rows) {
      nlohmann::json rj{{"n", row.n}};
      if (row.depth) rj["depth"] = *row.depth;
      if (row.is_zero) rj["zero"] = *row.is_zero;
      if (!row.error.empty()) rj["error"] = row.error;
      rows.push_back(std::move(rj));
    }
    nlohmann::json j{{"params", p.to_json()}, {"e", args.e},      {"strategy", args.strategy},
                     {"rows", rows},          {"periodic_window", profile.periodic_window_end},
                     {"minima", profile.minima}};
    out << j.dump(2) << "\n";
    return opt.exit_code();
  }
  if (opt.format == "csv") {
    out << "n," << (strategy == DepthStrategy::kZeroDetect ? "zero" : "depth") << "\n";
    for (const auto& row : profile.rows) {
      out << row.n << ",";
      if (!row.error.empty()) out << "?";
      else if (row.depth) out << *row.depth;
      else out << (*row.is_zero ? "Z" : "N");
      out << "\n";
    }
    return opt.exit_code();
  }

  out << "depth profile for BHH(" << p.m << "," << p.r << "," << p.s << "), e = " << args.e
      << ", strategy = " << args.strategy << "\n";
  out << "n:    ";
  for (const auto& row : profile.rows) out << " " << row.n;
  out << "\n";
  out << (strategy == DepthStrategy::kZeroDetect ? "zero: " : "depth:");
  for (const auto& row : profile.rows) {
    if (!row.error.empty()) out << " ?";
    else if (row.depth) out << " " << *row.depth;
    else out << " " << (*row.is_zero ? "Z" : "N");
  }
  out << "\n";
  out << "local minima (depth " << args.e - 1 << ") at n =";
  for (std::size_t k = 0; k < profile.minima.size(); ++k)
    out << (k ? "," : "") << " " << profile.minima[k];
  out << "; periodic window [1, " << profile.periodic_window_end << "]; constant "
      << p.s + args.e - 1 << " beyond\n";
  return opt.exit_code();
}

// ------------------------------------------------------------ identity -----

int cmd_identity(CliOptions& opt, int m_max) {
  std::ostream& out = *opt.out;
  long long cases = 0;
  std::vector<std::string> failures;
  for (int m = 1; m <= m_max; ++m)
    for (long long n = 1; n <= 2 * static_cast<long long>(m) + 4; ++n) {
      ++cases;
      if (!identity_holds(m, n))
        failures.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  if (failures.empty()) {
    out << "identity holds for all " << cases << " cases (m <= " << m_max << ")\n";
  } else {
    opt.saw_mismatch = true;
    out << "identity FAILS for:\n";
    for (const auto& f : failures) out << "  " << f << "\n";
  }
  return opt.exit_code();
}

// ------------------------------------------------------------- witness -----

struct WitnessArgs {
  std::string kind;
  int m = 1, r = 2, s = 1;
  long long n = 1;
  std::string rows; // "1,2;2" -> row 1 gets columns {1,2}, row 2 gets {2}
  int i0 = 0, j0 = 0;
  int u = -1, v = -1;
};

GGoodPattern parse_pattern(const WitnessArgs& args, bool with_c) {
  GGoodPattern pattern;
  pattern.m = args.m;
  pattern.r = args.r;
  pattern.contains_c = with_c;
  pattern.rows.assign(static_cast<std::size_t>(args.m), 0);
  std::stringstream stream(args.rows);
  std::string row;
  int i = 0;
  while (std::getline(stream, row, ';')) {
    if (i >= args.m) throw PreconditionError("more rows than m in --rows");
    std::stringstream cols(row);
    std::string col;
    while (std::getline(cols, col, ',')) {
      const int j = std::stoi(col);
      if (j < 1 || j > args.r) throw PreconditionError("column out of range in --rows");
      pattern.rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << (j - 1);
    }
    ++i;
  }
  if (i != args.m) throw PreconditionError("--rows must list exactly m rows");
  return pattern;
}

int cmd_witness(CliOptions& opt, const WitnessArgs& args) {
  const BHHParams p = BHHParams::make(args.m, args.r, args.s);
  std::ostream& out = *opt.out;

  Monomial w = Monomial::one(p.registry);
  MonomialPrime prime = MonomialPrime::full(p.registry);
  long long n = args.n;

  if (args.kind == "full-half") {
    GGoodPattern pattern = parse_pattern(args, true);
    prime = pattern.to_prime(p);
    const auto full = pattern.full_rows();
    const auto positions = pattern.partial_positions();
    int u = args.u, v = args.v;
    if ((u < 0) != (v < 0)) throw PreconditionError("--u and --v must be given together");
    if (u < 0) {
      // First feasible split of n - 1 into u*r + v.
      u = -1;
      for (int cand_u = 0; cand_u <= static_cast<int>(full.size()); ++cand_u) {
        const long long cand_v = n - 1 - static_cast<long long>(cand_u) * args.r;
        if (cand_v >= 0 && cand_v <= static_cast<long long>(positions.size())) {
          u = cand_u;
          v = static_cast<int>(cand_v);
          break;
        }
      }
      if (u < 0) throw PreconditionError("n admits no schedule u*r + v + 1 for this pattern");
    }
    std::vector<int> U0(full.begin(), full.begin() + u);
    std::vector<std::pair<int, int>> V0(positions.begin(), positions.begin() + v);
    w = witness_cfullhalf(p, pattern, U0, V0, witness_exponent(n), n);
  } else if (args.kind == "other-c") {
    GGoodPattern pattern = parse_pattern(args, true);
    prime = pattern.to_prime(p);
    w = witness_otherc(p, prime, args.i0, args.j0, witness_exponent(n), n);
  } else if (args.kind == "higher-power") {
    GGoodPattern pattern = parse_pattern(args, false);
    prime = pattern.to_prime(p);
    w = witness_ggood_noc(p, prime, n);
  } else if (args.kind == "first-power") {
    GGoodPattern pattern = parse_pattern(args, false);
    prime = pattern.to_prime(p);
    n = 1;
    w = witness_firstpower(p, prime);
  } else {
    throw PreconditionError("unknown witness kind: " + args.kind);
  }

  const MonomialIdeal In = power(build_bhh(p), static_cast<unsigned>(n));
  const bool pass = verify_witness(In, w, prime);
  if (!pass) opt.saw_mismatch = true;

  if (opt.format == "json") {
    nlohmann::json j{{"kind", args.kind}, {"params", p.to_json()},   {"n", n},
                     {"prime", prime.to_json()}, {"witness", w.to_json()}, {"pass", pass}};
    out << j.dump(2) << "\n";
  } else {
    out << "witness kind=" << args.kind << " n=" << n << "\n";
    out << "prime:   " << prime.str() << "\n";
    out << "witness: " << w.str() << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return opt.exit_code();
}

// -------------------------------------------------------------- maxima -----

int cmd_maxima(CliOptions& opt, int m) {
  std::ostream& out = *opt.out;
  const auto maxima = maxima_profile(m);
  const long long expected_count = (m - 1 + 1) / 2; // ceil((m-1)/2)
  const BigInt expected_value = BigInt(2) * pow(BigInt(3), static_cast<unsigned>(m)) + 1;

  bool ok = static_cast<long long>(maxima.size()) == expected_count;
  for (std::size_t k = 0; k < maxima.size() && ok; ++k) {
    if (maxima[k].first != 3 + 2 * static_cast<long long>(k)) ok = false;
    if (maxima[k].second != expected_value) ok = false;
  }
  if (!ok) opt.saw_mismatch = true;

  if (opt.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [n, value] : maxima) list.push_back({{"n", n}, {"value", value.str()}});
    out << nlohmann::json{{"m", m},
                          {"maxima", list},
                          {"expected_count", expected_count},
                          {"expected_value", expected_value.str()},
                          {"pass", ok}}
               .dump(2)
        << "\n";
    return opt.exit_code();
  }
  out << "local maxima of n -> #Ass(BHH(" << m << ",2,s)^n):";
  if (maxima.empty()) out << " none";
  for (const auto& [n, value] : maxima) out << " (n=" << n << ", " << value.str() << ")";
  out << "\n";
  out << "expected: " << expected_count << " maxima at n = 3, 5, ..., each "
      << expected_value.str() << " -> " << (ok ? "PASS" : "FAIL") << "\n";
  return opt.exit_code();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliOptions opt;
  opt.out = &out;
  opt.err = &err;

  CLI::App app{"monomialis: associated primes and depth of powers of the BHH ideal family"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json", "md"}))
      ->capture_default_str();
  app.add_option("--cache-dir", opt.cache_dir,
                 "Cache directory (default $MONOMIALIS_CACHE or .monomialis-cache)");
  app.add_flag("--no-cache", opt.no_cache, "Bypass the result cache");
  app.add_flag("--verify-cache", opt.verify_cache,
               "Recompute on cache hits and fail on byte mismatches");
  app.add_option("--budget-seconds", opt.budget_seconds, "Per-cell time budget")
      ->capture_default_str();

  AssArgs ass_args;
  CLI::App* ass = app.add_subcommand("ass", "Associated primes of BHH(m,r,s)^n via decomposition");
  ass->add_option("-m", ass_args.m, "rows")->required();
  ass->add_option("-r", ass_args.r, "columns")->required();
  ass->add_option("-s", ass_args.s, "c-variables")->capture_default_str();
  ass->add_option("-n", ass_args.n, "power")->required();
  ass->add_flag("--containing-c", ass_args.containing_c, "List only primes containing c");
  ass->add_flag("--c-free", ass_args.c_free, "List only primes without c");
  ass->add_flag("--total", ass_args.total, "Report the total count verdict");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Grid of c-containing counts (rows m, columns n)");
  table->add_option("-r", table_args.r, "columns parameter")->required();
  table->add_option("--m-max", table_args.m_max, "max m")->required();
  table->add_option("--n-max", table_args.n_max, "max n")->required();
  table->add_option("--source", table_args.source, "formula|oracle|both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}))
      ->capture_default_str();

  DepthArgs depth_args;
  CLI::App* depth = app.add_subcommand("depth", "Depth profile of BHH(m,r,s)^n (e-fold split)");
  depth->add_option("-m", depth_args.m)->required();
  depth->add_option("-r", depth_args.r)->required();
  depth->add_option("-s", depth_args.s)->capture_default_str();
  depth->add_option("--e", depth_args.e, "split arity")->capture_default_str();
  depth->add_option("--n-max", depth_args.n_max)->required();
  depth->add_option("--strategy", depth_args.strategy, "formula|betti|zero-detect")
      ->check(CLI::IsMember({"formula", "betti", "zero-detect"}))
      ->capture_default_str();

  int identity_m_max = 8;
  CLI::App* identity = app.add_subcommand("identity", "Check the double-count binomial identity");
  identity->add_option("--m-max", identity_m_max)->capture_default_str();

  WitnessArgs witness_args;
  CLI::App* witness = app.add_subcommand("witness", "Build a witness monomial and verify it");
  witness->add_option("--kind", witness_args.kind, "full-half|other-c|higher-power|first-power")
      ->required();
  witness->add_option("-m", witness_args.m)->required();
  witness->add_option("-r", witness_args.r)->required();
  witness->add_option("-s", witness_args.s)->capture_default_str();
  witness->add_option("-n", witness_args.n)->capture_default_str();
  witness->add_option("--rows", witness_args.rows,
                      "Columns of x-variables in the prime, per row: e.g. \"1,2;2\"")
      ->required();
  witness->add_option("--i0", witness_args.i0, "distinguished row (other-c)");
  witness->add_option("--j0", witness_args.j0, "distinguished column (other-c)");
  witness->add_option("--u", witness_args.u, "full rows to spend (full-half)");
  witness->add_option("--v", witness_args.v, "partial positions to spend (full-half)");

  int maxima_m = 1;
  CLI::App* maxima = app.add_subcommand("maxima", "Local maxima of the total count for r = 2");
  maxima->add_option("-m", maxima_m)->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitPrecondition;
  }

  try {
    if (*ass) return cmd_ass(opt, ass_args);
    if (*table) return cmd_table(opt, table_args);
    if (*depth) return cmd_depth(opt, depth_args);
    if (*identity) return cmd_identity(opt, identity_m_max);
    if (*witness) return cmd_witness(opt, witness_args);
    if (*maxima) return cmd_maxima(opt, maxima_m);
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

} // namespace monomialis
