#include "armine/miner.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace armine {

std::string_view to_string(MiningMode mode) noexcept {
  return mode == MiningMode::apriori ? "apriori" : "iar";
}

std::vector<Itemset> generate_candidates(std::span<const Itemset> prev_frequent, std::size_t k) {
  if (k < 2) throw std::invalid_argument("candidate generation starts at level 2");
  if (prev_frequent.empty()) return {};
  for (const Itemset& s : prev_frequent) {
    if (s.size() != k - 1) {
      throw std::invalid_argument("previous frequent sets must all have size " +
                                  std::to_string(k - 1));
    }
  }
  assert(std::is_sorted(prev_frequent.begin(), prev_frequent.end()));

  const auto has = [&](const Itemset& s) {
    return std::binary_search(prev_frequent.begin(), prev_frequent.end(), s);
  };

  std::vector<Itemset> candidates;
  std::vector<Item> buf;
  for (std::size_t i = 0; i < prev_frequent.size(); ++i) {
    const auto a = prev_frequent[i].items();
    for (std::size_t j = i + 1; j < prev_frequent.size(); ++j) {
      const auto b = prev_frequent[j].items();
      // Sorted input: once the k-2 prefix changes, no later j can match.
      if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
      buf.assign(a.begin(), a.end());
      buf.push_back(b.back());
      Itemset joined = Itemset::from_items(buf);

      bool all_subsets_frequent = true;
      for (std::size_t drop = 0; drop < joined.size(); ++drop) {
        std::vector<Item> sub;
        sub.reserve(k - 1);
        for (std::size_t p = 0; p < joined.size(); ++p) {
          if (p != drop) sub.push_back(joined[p]);
        }
        if (!has(Itemset::from_items(std::move(sub)))) {
          all_subsets_frequent = false;
          break;
        }
      }
      if (all_subsets_frequent) candidates.push_back(std::move(joined));
    }
  }
  // Generation order from sorted input is already lexicographic.
  assert(std::is_sorted(candidates.begin(), candidates.end()));
  return candidates;
}

namespace {

void count_pass(TTree& tree, const TransactionDb& db, const std::vector<Itemset>& candidates) {
  for (const Itemset& c : candidates) tree.insert_candidate(c);
  for (const Itemset& t : db.transactions()) {
    for (const Itemset& c : candidates) {
      if (t.contains_all(c)) tree.increment_support(c);
    }
  }
}

struct LevelwiseOutcome {
  std::vector<std::pair<Itemset, std::uint64_t>> frequent;
  TTreeMetrics metrics;
};

LevelwiseOutcome run_levelwise(const TransactionDb& scan_db, std::uint64_t min_count,
                               std::size_t max_level) {
  TTree tree(scan_db.universe_size());

  std::vector<Itemset> candidates;
  candidates.reserve(scan_db.universe_size());
  for (Item i = 1; i <= scan_db.universe_size(); ++i) candidates.push_back(Itemset{i});
  count_pass(tree, scan_db, candidates);
  std::vector<Itemset> frequent_k = tree.prune_level(1, min_count);

  for (std::size_t k = 2; !frequent_k.empty() && k <= max_level; ++k) {
    candidates = generate_candidates(frequent_k, k);
    if (candidates.empty()) break;
    count_pass(tree, scan_db, candidates);
    frequent_k = tree.prune_level(k, min_count);
  }

  return {tree.frequent_itemsets(), tree.metrics()};
}

std::size_t effective_max_level(const TransactionDb& db, std::optional<std::size_t> max_level) {
  if (!max_level) return db.universe_size();
  if (*max_level == 0) throw std::invalid_argument("max level must be >= 1");
  return *max_level;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

MiningResult apriori(const TransactionDb& db, const SupportThreshold& threshold,
                     std::optional<std::size_t> max_level) {
  if (db.size() == 0) throw std::invalid_argument("cannot mine an empty database");
  const std::size_t cap = effective_max_level(db, max_level);
  const std::uint64_t min_count = threshold.resolve(db.size());

  const auto start = Clock::now();
  LevelwiseOutcome outcome = run_levelwise(db, min_count, cap);

  MiningResult result;
  result.frequent = std::move(outcome.frequent);
  result.metrics = outcome.metrics;
  result.elapsed_ms = ms_since(start);
  result.mode = MiningMode::apriori;
  result.working_db_size = db.size();
  result.min_count = min_count;
  return result;
}

MiningResult iar(const TransactionDb& db, const Itemset& user_attrs,
                 const SupportThreshold& threshold, std::optional<std::size_t> max_level) {
  if (db.size() == 0) throw std::invalid_argument("cannot mine an empty database");
  const std::size_t cap = effective_max_level(db, max_level);
  // Threshold binds to the original database; scans touch only D'.
  const std::uint64_t min_count = threshold.resolve(db.size());

  const auto start = Clock::now();
  TransactionDb working = filter_database(db, user_attrs);

  MiningResult result;
  result.mode = MiningMode::iar;
  result.working_db_size = working.size();
  result.min_count = min_count;
  if (working.size() > 0) {
    LevelwiseOutcome outcome = run_levelwise(working, min_count, cap);
    result.frequent = std::move(outcome.frequent);
    result.metrics = outcome.metrics;
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

MiningResult mine(const TransactionDb& db, const MiningConfig& config) {
  if (config.user_attrs) return iar(db, *config.user_attrs, config.threshold, config.max_level);
  return apriori(db, config.threshold, config.max_level);
}

}  // namespace armine
