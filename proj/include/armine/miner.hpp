#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "armine/core.hpp"
#include "armine/ttree.hpp"

namespace armine {

enum class MiningMode { apriori, iar };

std::string_view to_string(MiningMode mode) noexcept;

struct MiningConfig {
  SupportThreshold threshold;
  /// Present => interactive mode: mine the working database D' of
  /// transactions containing these attributes.
  std::optional<Itemset> user_attrs;
  /// Safety cap on itemset size; defaults to the universe size.
  std::optional<std::size_t> max_level;
};

struct MiningResult {
  /// (itemset, support) in lexicographic order. Supports are counts over
  /// the scanned database (D' in interactive mode).
  std::vector<std::pair<Itemset, std::uint64_t>> frequent;
  TTreeMetrics metrics;
  double elapsed_ms = 0.0;
  MiningMode mode = MiningMode::apriori;
  /// |D| for apriori, |D'| for iar.
  std::size_t working_db_size = 0;
  /// The absolute minimum count the threshold resolved to.
  std::uint64_t min_count = 0;
};

/// Classic join-and-prune candidate generation: join pairs of (k-1)-sets
/// agreeing on their first k-2 items, then drop any result with a
/// (k-1)-subset missing from prev_frequent. Input must be
/// lexicographically sorted sets all of size k-1 (mixed sizes throw
/// std::invalid_argument); output is sorted and duplicate-free.
std::vector<Itemset> generate_candidates(std::span<const Itemset> prev_frequent, std::size_t k);

/// Level-wise search over the whole database. Pass 1 counts every
/// singleton 1..m; pass k counts generate_candidates(L_{k-1}, k); stops
/// when a level yields no survivors or no candidates. Throws
/// std::invalid_argument on an empty database.
MiningResult apriori(const TransactionDb& db, const SupportThreshold& threshold,
                     std::optional<std::size_t> max_level = std::nullopt);

/// Interactive variant: filters db to the working database D' of
/// transactions containing user_attrs, then runs the level-wise search
/// scanning only D'. Fractional thresholds resolve against the ORIGINAL
/// database size, so itemsets lacking the user attributes can be
/// under-counted relative to db and drop out; itemsets containing
/// user_attrs keep exactly the support they have in db. An empty D'
/// yields an empty result with zeroed metrics.
MiningResult iar(const TransactionDb& db, const Itemset& user_attrs,
                 const SupportThreshold& threshold,
                 std::optional<std::size_t> max_level = std::nullopt);

/// Dispatches on config.user_attrs.
MiningResult mine(const TransactionDb& db, const MiningConfig& config);

}  // namespace armine
