#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "armine/bench.hpp"
#include "test_util.hpp"

using namespace armine;
using namespace armine::testutil;

namespace {

BenchConfig tiny_config() {
  BenchConfig config;
  config.sizes = {30, 60};
  config.support_fractions = {Ratio(1, 2)};
  config.user_attrs = Itemset{1};
  config.gen.seed = 7;
  config.repetitions = 2;
  return config;
}

BenchRow row_from(const MiningResult& result, std::size_t size, Ratio support) {
  return BenchRow{.size = size,
                  .support = support,
                  .algorithm = result.mode,
                  .frequent_count = result.frequent.size(),
                  .node_count = result.metrics.node_count,
                  .update_count = result.metrics.update_count,
                  .storage_bytes = result.metrics.storage_bytes(),
                  .elapsed_ms = result.elapsed_ms,
                  .working_db_size = result.working_db_size};
}

}  // namespace

TEST_CASE("comparison runs produce one paired row set per cell") {
  const std::vector<BenchRow> rows = run_comparison(tiny_config());
  REQUIRE(rows.size() == 4);  // 2 sizes x 1 support x 2 algorithms

  CHECK(rows[0].size == 30);
  CHECK(rows[0].algorithm == MiningMode::apriori);
  CHECK(rows[1].size == 30);
  CHECK(rows[1].algorithm == MiningMode::iar);
  CHECK(rows[2].size == 60);
  CHECK(rows[3].size == 60);

  for (const BenchRow& row : rows) {
    CHECK(row.support == Ratio(1, 2));
    CHECK(row.storage_bytes == 12 * row.node_count);
    if (row.algorithm == MiningMode::apriori) {
      CHECK(row.working_db_size == row.size);
    } else {
      CHECK(row.working_db_size <= row.size);
    }
  }
  CHECK(assert_dominance(rows).ok());
}

TEST_CASE("non-timing columns ignore the repetition count") {
  BenchConfig once = tiny_config();
  once.repetitions = 1;
  BenchConfig thrice = tiny_config();
  thrice.repetitions = 3;

  const auto a = run_comparison(once);
  const auto b = run_comparison(thrice);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].size == b[i].size);
    CHECK(a[i].support == b[i].support);
    CHECK(a[i].algorithm == b[i].algorithm);
    CHECK(a[i].frequent_count == b[i].frequent_count);
    CHECK(a[i].node_count == b[i].node_count);
    CHECK(a[i].update_count == b[i].update_count);
    CHECK(a[i].storage_bytes == b[i].storage_bytes);
    CHECK(a[i].working_db_size == b[i].working_db_size);
  }
}

TEST_CASE("dominance report on fixture-backed rows") {
  const TransactionDb db = sample_db();
  const auto threshold = SupportThreshold::absolute(2);

  SUBCASE("the fixture pair has no violations") {
    const std::vector<BenchRow> rows{
        row_from(apriori(db, threshold), db.size(), Ratio(1, 2)),
        row_from(iar(db, Itemset{2}, threshold), db.size(), Ratio(1, 2)),
    };
    CHECK(rows[0].frequent_count == 8);
    CHECK(rows[1].frequent_count == 7);
    const DominanceReport report = assert_dominance(rows);
    CHECK(report.ok());
  }
  SUBCASE("equality still counts as dominance") {
    // Item 1 is in every transaction, so the working database is the
    // whole database and the runs coincide.
    const TransactionDb everywhere = parse_transactions("1 2\n1 3\n1 2 3\n");
    const std::vector<BenchRow> rows{
        row_from(apriori(everywhere, threshold), everywhere.size(), Ratio(1, 2)),
        row_from(iar(everywhere, Itemset{1}, threshold), everywhere.size(), Ratio(1, 2)),
    };
    CHECK(rows[0].frequent_count == rows[1].frequent_count);
    CHECK(rows[0].node_count == rows[1].node_count);
    CHECK(rows[0].update_count == rows[1].update_count);
    CHECK(assert_dominance(rows).ok());
  }
  SUBCASE("violations are caught") {
    BenchRow a = row_from(apriori(db, threshold), db.size(), Ratio(1, 2));
    BenchRow i = row_from(iar(db, Itemset{2}, threshold), db.size(), Ratio(1, 2));
    i.node_count = a.node_count + 5;
    i.update_count = a.update_count + 1;
    const DominanceReport report = assert_dominance(std::vector<BenchRow>{a, i});
    CHECK(report.violations.size() == 2);
  }
  SUBCASE("unpaired rows are rejected") {
    const std::vector<BenchRow> rows{row_from(apriori(db, threshold), db.size(), Ratio(1, 2))};
    CHECK_THROWS_AS(assert_dominance(rows), std::invalid_argument);
  }
}

TEST_CASE("report formats") {
  const std::vector<BenchRow> rows = run_comparison(tiny_config());

  SUBCASE("csv layout") {
    const std::string csv = emit_report(rows, ReportFormat::csv);
    std::istringstream lines(csv);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    REQUIRE(all.size() == rows.size() + 1);
    CHECK(all[0] ==
          "size,support,algorithm,frequent,nodes,updates,storage_bytes,elapsed_ms,"
          "working_db_size");
    CHECK(all[1].starts_with("30,0.5,apriori,"));
    CHECK(all[2].starts_with("30,0.5,iar,"));
  }
  SUBCASE("markdown layout") {
    BenchConfig config = tiny_config();
    config.support_fractions = {Ratio(1, 2), Ratio(3, 10)};
    const std::string md = emit_report(run_comparison(config), ReportFormat::markdown);

    std::size_t tables = 0;
    std::size_t series = 0;
    std::istringstream lines(md);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.starts_with("## Support")) ++tables;
      if (line == "size,apriori_ms,iar_ms") ++series;
    }
    CHECK(tables == 2);
    CHECK(series == 2);
    CHECK(md.find("| 30 | ") != std::string::npos);
  }
  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(emit_report(std::vector<BenchRow>{}, ReportFormat::csv),
                    std::invalid_argument);
  }
}

TEST_CASE("dominance holds whichever single attribute is chosen") {
  for (Item attr = 1; attr <= 7; ++attr) {
    BenchConfig config;
    config.sizes = {200, 400};
    config.support_fractions = {Ratio(1, 5), Ratio(3, 10)};
    config.user_attrs = Itemset{attr};
    config.repetitions = 1;
    const DominanceReport report = assert_dominance(run_comparison(config));
    CHECK(report.ok());
  }
}

TEST_CASE("config validation") {
  BenchConfig config = tiny_config();
  config.sizes = {60, 30};
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);

  config = tiny_config();
  config.sizes = {30, 30};
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);

  config = tiny_config();
  config.support_fractions = {Ratio(1, 1)};
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);

  config = tiny_config();
  config.user_attrs = Itemset{};
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);

  config = tiny_config();
  config.user_attrs = Itemset{9};
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);

  config = tiny_config();
  config.repetitions = 0;
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);

  config = tiny_config();
  config.sizes = {};
  CHECK_THROWS_AS(run_comparison(config), std::invalid_argument);
}
