#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "armine/core.hpp"
#include "armine/datagen.hpp"
#include "armine/miner.hpp"

namespace armine {

/// Paired apriori-vs-iar comparison across dataset sizes and support
/// levels. One database is generated per size (seed derived from the
/// master seed in `gen.seed` via splitmix64(master ^ size)) and feeds
/// both algorithms at every support level, so the comparison is paired.
struct BenchConfig {
  std::vector<std::size_t> sizes{2000, 10000, 30000, 50000, 120000};
  std::vector<Ratio> support_fractions{Ratio(1, 5), Ratio(3, 10)};
  /// Attributes the interactive runs are constrained to.
  Itemset user_attrs{1};
  /// Template for the generated databases; num_transactions and seed are
  /// overridden per size, seed acting as the master seed.
  GenConfig gen{.num_transactions = 0, .universe_size = 7, .density = 0.5, .seed = 42};
  /// Timing repetitions; the median wall time is reported. Non-timing
  /// columns are identical across repetitions.
  unsigned repetitions = 3;
};

struct BenchRow {
  std::size_t size = 0;
  Ratio support;
  MiningMode algorithm = MiningMode::apriori;
  std::uint64_t frequent_count = 0;
  std::uint64_t node_count = 0;
  std::uint64_t update_count = 0;
  std::uint64_t storage_bytes = 0;
  double elapsed_ms = 0.0;
  std::size_t working_db_size = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// Violations are the metric inequalities (frequent, nodes, updates,
/// storage) that failed; timing observations are advisory only and never
/// count as violations.
struct DominanceReport {
  std::vector<std::string> violations;
  std::vector<std::string> advisories;

  bool ok() const noexcept { return violations.empty(); }
};

/// Runs apriori and iar on the same generated database for every
/// (size, support) cell. Rows come back ordered by (support, size,
/// algorithm). Mining or generation failures are rethrown with the cell
/// attached.
std::vector<BenchRow> run_comparison(const BenchConfig& config);

/// Pairs rows by (size, support) — unpaired rows throw
/// std::invalid_argument — and checks iar <= apriori on frequent_count,
/// node_count, update_count and storage_bytes.
DominanceReport assert_dominance(std::span<const BenchRow> rows);

enum class ReportFormat { csv, markdown };

/// csv: "size,support,algorithm,frequent,nodes,updates,storage_bytes,
/// elapsed_ms,working_db_size" plus one line per row. markdown: one
/// side-by-side apriori/iar table per support level, each followed by a
/// "size,apriori_ms,iar_ms" timing series for plotting. Throws
/// std::invalid_argument on empty input.
void emit_report(std::span<const BenchRow> rows, ReportFormat format, std::ostream& out);
std::string emit_report(std::span<const BenchRow> rows, ReportFormat format);

}  // namespace armine
