// armine: frequent-itemset and association-rule mining CLI.
//
// Exit codes: 0 success, 1 user error (bad flags, unreadable or malformed
// input, failed --assert), 2 internal invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "armine/bench.hpp"
#include "armine/core.hpp"
#include "armine/datagen.hpp"
#include "armine/miner.hpp"
#include "armine/rules.hpp"

namespace {

using namespace armine;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

Itemset parse_attrs(const std::string& text) {
  std::vector<Item> ids;
  for (const std::string& part : split(text, ',')) {
    const Ratio value = parse_decimal(part);
    if (value.den != 1 || value.num == 0) {
      throw std::invalid_argument("attribute ids must be positive integers: '" + part + "'");
    }
    ids.push_back(static_cast<Item>(value.num));
  }
  return Itemset::from_items(std::move(ids));
}

Ratio parse_support_fraction(const std::string& text) {
  const Ratio f = parse_decimal(text);
  if (f.num == 0) throw std::invalid_argument("support fraction must be > 0");
  if (f >= Ratio(1, 1)) {
    throw std::invalid_argument(
        "support fractions must be < 1; use --support-count for absolute thresholds");
  }
  return f;
}

Ratio parse_confidence(const std::string& text) {
  const Ratio c = parse_decimal(text);
  if (c > Ratio(1, 1)) throw std::invalid_argument("confidence must lie in [0,1]");
  return c;
}

// Data output goes to --out when given, standard output otherwise.
class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

struct GenFlags {
  std::uint64_t n = 0;
  std::uint32_t m = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

struct MineFlags {
  std::string input;
  std::string support_frac;
  std::uint64_t support_count = 0;
  bool have_count = false;
  std::string attrs;
  bool rules = false;
  std::string min_conf;
  bool no_lhs_constraint = false;
  bool metrics = false;
  std::string out;
};

struct BenchFlags {
  std::string sizes = "2000,10000,30000,50000,120000";
  std::string supports = "0.2,0.3";
  std::string attrs = "1";
  std::uint64_t seed = 42;
  std::string format = "csv";
  bool check = false;
  unsigned reps = 3;
  std::string out;
};

int run_gen(const GenFlags& flags) {
  GenConfig config;
  config.num_transactions = flags.n;
  config.universe_size = flags.m;
  config.density = flags.density;
  config.seed = flags.seed;
  const TransactionDb db = generate(config);

  OutputTarget target(flags.out);
  const std::string text = serialize_transactions(db);
  target.stream() << text;
  target.stream().flush();
  std::cerr << "wrote " << db.size() << " transactions (" << text.size() << " bytes)\n";
  return 0;
}

SupportThreshold threshold_from(const MineFlags& flags) {
  if (!flags.support_frac.empty() && flags.have_count) {
    throw std::invalid_argument("--support-frac and --support-count are mutually exclusive");
  }
  if (!flags.support_frac.empty()) {
    return SupportThreshold::fraction(parse_support_fraction(flags.support_frac));
  }
  if (flags.have_count) return SupportThreshold::absolute(flags.support_count);
  throw std::invalid_argument("one of --support-frac or --support-count is required");
}

void print_rules(const std::vector<AssociationRule>& rules, std::ostream& out) {
  for (const AssociationRule& rule : rules) {
    out << rule.antecedent.to_string() << " -> " << rule.consequent.to_string()
        << " supp=" << rule.support << " conf=" << rule.confidence.to_decimal(4) << '\n';
  }
}

int run_mine(const MineFlags& flags, bool rules_only) {
  const TransactionDb db = load_transaction_file(flags.input, /*require_non_empty=*/true);

  MiningConfig config;
  config.threshold = threshold_from(flags);
  if (!flags.attrs.empty()) config.user_attrs = parse_attrs(flags.attrs);

  const MiningResult result = mine(db, config);
  if (result.mode == MiningMode::iar) {
    std::cerr << "working database: " << result.working_db_size << "/" << db.size()
              << " transactions\n";
  }
  if (flags.metrics) {
    char ms[64];
    std::snprintf(ms, sizeof(ms), "%.3f", result.elapsed_ms);
    std::cerr << "node_count: " << result.metrics.node_count << '\n'
              << "final_node_count: " << result.metrics.final_node_count << '\n'
              << "update_count: " << result.metrics.update_count << '\n'
              << "storage_bytes: " << result.metrics.storage_bytes() << '\n'
              << "elapsed_ms: " << ms << '\n';
  }

  OutputTarget target(flags.out);
  std::ostream& out = target.stream();
  if (!rules_only) {
    for (const auto& [itemset, support] : result.frequent) {
      out << itemset.to_string() << " supp=" << support << '\n';
    }
  }
  if (flags.rules || rules_only) {
    const Ratio min_conf = parse_confidence(flags.min_conf);
    std::optional<Itemset> required;
    if (config.user_attrs && !flags.no_lhs_constraint) required = config.user_attrs;
    print_rules(generate_rules(result.frequent, min_conf, required), out);
  }
  out.flush();
  return 0;
}

int run_bench(const BenchFlags& flags) {
  BenchConfig config;
  config.sizes.clear();
  for (const std::string& part : split(flags.sizes, ',')) {
    const Ratio value = parse_decimal(part);
    if (value.den != 1) throw std::invalid_argument("sizes must be integers: '" + part + "'");
    config.sizes.push_back(static_cast<std::size_t>(value.num));
  }
  config.support_fractions.clear();
  for (const std::string& part : split(flags.supports, ',')) {
    config.support_fractions.push_back(parse_support_fraction(part));
  }
  config.user_attrs = parse_attrs(flags.attrs);
  config.gen.seed = flags.seed;
  config.repetitions = flags.reps;

  const std::vector<BenchRow> rows = run_comparison(config);
  const ReportFormat format =
      flags.format == "markdown" ? ReportFormat::markdown : ReportFormat::csv;

  OutputTarget target(flags.out);
  emit_report(rows, format, target.stream());
  target.stream().flush();

  if (flags.check) {
    const DominanceReport report = assert_dominance(rows);
    for (const std::string& note : report.advisories) std::cerr << note << '\n';
    for (const std::string& violation : report.violations) {
      std::cerr << "dominance violation: " << violation << '\n';
    }
    if (!report.ok()) return 1;
    std::cerr << "dominance holds on all " << rows.size() / 2 << " cells\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequent-itemset and association-rule mining toolkit"};
  app.require_subcommand(1);

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic transaction file");
  gen->add_option("--n", gen_flags.n, "number of transactions")->required();
  gen->add_option("--m", gen_flags.m, "universe size (number of attributes)")->required();
  gen->add_option("--density", gen_flags.density, "per-item inclusion probability in (0,1)")
      ->required();
  gen->add_option("--seed", gen_flags.seed, "generator seed")->required();
  gen->add_option("--out", gen_flags.out, "write to this file instead of standard output");

  MineFlags mine_flags;
  CLI::App* mine = app.add_subcommand("mine", "mine frequent itemsets (and optionally rules)");
  mine->add_option("--input", mine_flags.input, "transaction file")->required();
  CLI::Option* frac = mine->add_option("--support-frac", mine_flags.support_frac,
                                       "minimum support as a fraction in (0,1)");
  CLI::Option* count =
      mine->add_option("--support-count", mine_flags.support_count,
                       "minimum support as an absolute transaction count");
  count->excludes(frac);
  frac->excludes(count);
  mine->add_option("--attrs", mine_flags.attrs,
                   "comma-separated attribute ids; engages interactive mode");
  CLI::Option* rules_flag =
      mine->add_flag("--rules", mine_flags.rules, "also emit association rules");
  CLI::Option* conf_opt =
      mine->add_option("--min-conf", mine_flags.min_conf, "minimum confidence in [0,1]");
  rules_flag->needs(conf_opt);
  conf_opt->needs(rules_flag);
  mine->add_flag("--no-lhs-constraint", mine_flags.no_lhs_constraint,
                 "in interactive mode, do not require user attributes on rule left-hand sides")
      ->needs(rules_flag);
  mine->add_flag("--metrics", mine_flags.metrics,
                 "print T-tree counters and elapsed time to standard error");
  mine->add_option("--out", mine_flags.out, "write to this file instead of standard output");

  MineFlags rules_flags;
  rules_flags.rules = true;
  CLI::App* rules = app.add_subcommand("rules", "mine and emit association rules only");
  rules->add_option("--input", rules_flags.input, "transaction file")->required();
  CLI::Option* rfrac = rules->add_option("--support-frac", rules_flags.support_frac,
                                         "minimum support as a fraction in (0,1)");
  CLI::Option* rcount =
      rules->add_option("--support-count", rules_flags.support_count,
                        "minimum support as an absolute transaction count");
  rcount->excludes(rfrac);
  rfrac->excludes(rcount);
  rules->add_option("--attrs", rules_flags.attrs,
                    "comma-separated attribute ids; engages interactive mode");
  rules->add_option("--min-conf", rules_flags.min_conf, "minimum confidence in [0,1]")
      ->required();
  rules->add_flag("--no-lhs-constraint", rules_flags.no_lhs_constraint,
                  "in interactive mode, do not require user attributes on rule left-hand sides");
  rules->add_option("--out", rules_flags.out, "write to this file instead of standard output");

  BenchFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "compare apriori and iar on generated data");
  bench->add_option("--sizes", bench_flags.sizes, "comma-separated transaction counts");
  bench->add_option("--supports", bench_flags.supports, "comma-separated support fractions");
  bench->add_option("--attrs", bench_flags.attrs, "attributes for the interactive runs");
  bench->add_option("--seed", bench_flags.seed, "master seed");
  bench->add_option("--format", bench_flags.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_flag("--assert", bench_flags.check,
                  "fail (exit 1) unless iar <= apriori on every metric of every cell");
  bench->add_option("--reps", bench_flags.reps, "timing repetitions (median reported)");
  bench->add_option("--out", bench_flags.out, "write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_flags);
    if (mine->parsed()) {
      mine_flags.have_count = count->count() > 0;
      return run_mine(mine_flags, /*rules_only=*/false);
    }
    if (rules->parsed()) {
      rules_flags.have_count = rcount->count() > 0;
      return run_mine(rules_flags, /*rules_only=*/true);
    }
    if (bench->parsed()) return run_bench(bench_flags);
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
