#include "armine/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace armine {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void validate(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("bench needs at least one dataset size");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end()) ||
      std::adjacent_find(config.sizes.begin(), config.sizes.end()) != config.sizes.end()) {
    throw std::invalid_argument("dataset sizes must be strictly increasing");
  }
  for (std::size_t size : config.sizes) {
    if (size == 0) throw std::invalid_argument("dataset sizes must be >= 1");
  }
  if (config.support_fractions.empty()) {
    throw std::invalid_argument("bench needs at least one support level");
  }
  for (const Ratio& f : config.support_fractions) {
    if (f.num == 0 || f >= Ratio(1, 1)) {
      throw std::invalid_argument("support levels must lie strictly between 0 and 1");
    }
  }
  if (config.user_attrs.empty()) {
    throw std::invalid_argument("bench needs user attributes for the interactive runs");
  }
  if (config.user_attrs.max_item() > config.gen.universe_size) {
    throw std::invalid_argument("user attribute outside the generated universe");
  }
  if (config.repetitions == 0) throw std::invalid_argument("repetitions must be >= 1");
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

BenchRow run_cell(const TransactionDb& db, std::size_t size, Ratio support, MiningMode algorithm,
                  const BenchConfig& config) {
  const SupportThreshold threshold = SupportThreshold::fraction(support);
  std::vector<double> timings;
  timings.reserve(config.repetitions);
  std::optional<MiningResult> first;
  for (unsigned rep = 0; rep < config.repetitions; ++rep) {
    MiningResult result = algorithm == MiningMode::apriori
                              ? apriori(db, threshold)
                              : iar(db, config.user_attrs, threshold);
    timings.push_back(result.elapsed_ms);
    if (!first) first = std::move(result);
  }

  BenchRow row;
  row.size = size;
  row.support = support;
  row.algorithm = algorithm;
  row.frequent_count = first->frequent.size();
  row.node_count = first->metrics.node_count;
  row.update_count = first->metrics.update_count;
  row.storage_bytes = first->metrics.storage_bytes();
  row.elapsed_ms = median(std::move(timings));
  row.working_db_size = first->working_db_size;
  return row;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_comparison(const BenchConfig& config) {
  validate(config);

  std::vector<BenchRow> rows;
  rows.reserve(config.sizes.size() * config.support_fractions.size() * 2);
  for (std::size_t size : config.sizes) {
    GenConfig gen = config.gen;
    gen.num_transactions = size;
    gen.seed = splitmix64(config.gen.seed ^ static_cast<std::uint64_t>(size));
    const TransactionDb db = generate(gen);
    for (const Ratio& support : config.support_fractions) {
      for (MiningMode algorithm : {MiningMode::apriori, MiningMode::iar}) {
        try {
          rows.push_back(run_cell(db, size, support, algorithm, config));
        } catch (const std::exception& e) {
          throw std::runtime_error("bench cell size=" + std::to_string(size) +
                                   " support=" + support.to_decimal_trimmed() + " " +
                                   std::string(to_string(algorithm)) + ": " + e.what());
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.support != b.support) return a.support < b.support;
    if (a.size != b.size) return a.size < b.size;
    return a.algorithm < b.algorithm;
  });
  return rows;
}

DominanceReport assert_dominance(std::span<const BenchRow> rows) {
  std::map<std::pair<Ratio, std::size_t>, std::pair<const BenchRow*, const BenchRow*>> cells;
  for (const BenchRow& row : rows) {
    auto& cell = cells[{row.support, row.size}];
    (row.algorithm == MiningMode::apriori ? cell.first : cell.second) = &row;
  }

  DominanceReport report;
  for (const auto& [key, cell] : cells) {
    const auto& [support, size] = key;
    const std::string where =
        "size=" + std::to_string(size) + " support=" + support.to_decimal_trimmed();
    if (cell.first == nullptr || cell.second == nullptr) {
      throw std::invalid_argument("unpaired benchmark rows at " + where);
    }
    const BenchRow& a = *cell.first;
    const BenchRow& i = *cell.second;
    const auto check = [&](const char* metric, std::uint64_t iar_value,
                           std::uint64_t apriori_value) {
      if (iar_value > apriori_value) {
        report.violations.push_back(where + ": iar " + metric + " " + std::to_string(iar_value) +
                                    " > apriori " + std::to_string(apriori_value));
      }
    };
    check("frequent_count", i.frequent_count, a.frequent_count);
    check("node_count", i.node_count, a.node_count);
    check("update_count", i.update_count, a.update_count);
    check("storage_bytes", i.storage_bytes, a.storage_bytes);
    if (i.elapsed_ms >= a.elapsed_ms) {
      report.advisories.push_back(where + ": timing (advisory): iar " + format_ms(i.elapsed_ms) +
                                  " ms >= apriori " + format_ms(a.elapsed_ms) + " ms");
    }
  }
  return report;
}

namespace {

void emit_csv(std::span<const BenchRow> rows, std::ostream& out) {
  out << "size,support,algorithm,frequent,nodes,updates,storage_bytes,elapsed_ms,"
         "working_db_size\n";
  for (const BenchRow& row : rows) {
    out << row.size << ',' << row.support.to_decimal_trimmed() << ',' << to_string(row.algorithm)
        << ',' << row.frequent_count << ',' << row.node_count << ',' << row.update_count << ','
        << row.storage_bytes << ',' << format_ms(row.elapsed_ms) << ',' << row.working_db_size
        << '\n';
  }
}

void emit_markdown(std::span<const BenchRow> rows, std::ostream& out) {
  std::vector<Ratio> supports;
  for (const BenchRow& row : rows) {
    if (std::find(supports.begin(), supports.end(), row.support) == supports.end()) {
      supports.push_back(row.support);
    }
  }
  std::sort(supports.begin(), supports.end());

  for (const Ratio& support : supports) {
    std::map<std::size_t, std::pair<const BenchRow*, const BenchRow*>> by_size;
    for (const BenchRow& row : rows) {
      if (row.support != support) continue;
      auto& cell = by_size[row.size];
      (row.algorithm == MiningMode::apriori ? cell.first : cell.second) = &row;
    }

    out << "## Support " << support.to_decimal_trimmed() << "\n\n";
    out << "| Size | Frequent (apriori) | Frequent (iar) | Nodes (apriori) | Nodes (iar) "
           "| Updates (apriori) | Updates (iar) | Storage bytes (apriori) | Storage bytes (iar) "
           "|\n";
    out << "|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    const auto field = [](const BenchRow* row, std::uint64_t BenchRow::* member) {
      return row == nullptr ? std::string("-") : std::to_string(row->*member);
    };
    for (const auto& [size, cell] : by_size) {
      const auto& [a, i] = cell;
      out << "| " << size << " | " << field(a, &BenchRow::frequent_count) << " | "
          << field(i, &BenchRow::frequent_count) << " | " << field(a, &BenchRow::node_count)
          << " | " << field(i, &BenchRow::node_count) << " | "
          << field(a, &BenchRow::update_count) << " | " << field(i, &BenchRow::update_count)
          << " | " << field(a, &BenchRow::storage_bytes) << " | "
          << field(i, &BenchRow::storage_bytes) << " |\n";
    }

    out << "\nsize,apriori_ms,iar_ms\n";
    for (const auto& [size, cell] : by_size) {
      const auto& [a, i] = cell;
      out << size << ',' << (a ? format_ms(a->elapsed_ms) : "-") << ','
          << (i ? format_ms(i->elapsed_ms) : "-") << '\n';
    }
    out << '\n';
  }
}

}  // namespace

void emit_report(std::span<const BenchRow> rows, ReportFormat format, std::ostream& out) {
  if (rows.empty()) throw std::invalid_argument("no benchmark rows to report");
  if (format == ReportFormat::csv) emit_csv(rows, out);
  else emit_markdown(rows, out);
}

std::string emit_report(std::span<const BenchRow> rows, ReportFormat format) {
  std::ostringstream out;
  emit_report(rows, format, out);
  return out.str();
}

}  // namespace armine
