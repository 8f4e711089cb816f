#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "armine/core.hpp"

namespace armine {

/// Run counters for a T-tree. node_count is the PEAK number of
/// materialized nodes (candidates at their maximum extent), which is what
/// the benchmark reports; final_node_count is what is materialized right
/// now (after the last prune). Storage is accounted at 12 bytes per node:
/// node reference + support field + child-array reference, 4 bytes each.
struct TTreeMetrics {
  std::uint64_t node_count = 0;
  std::uint64_t update_count = 0;
  std::uint64_t final_node_count = 0;

  std::uint64_t storage_bytes() const noexcept { return 12 * node_count; }

  friend bool operator==(const TTreeMetrics&, const TTreeMetrics&) = default;
};

/// "Reverse" set-enumeration trie over items 1..m. The itemset
/// {i1 < i2 < ... < ik} lives at top[ik].children[i(k-1)]...children[i1]:
/// largest item first, so a node's child array only needs slots for items
/// smaller than its own id. Child arrays are allocated lazily with
/// exactly (own id - 1) slots; empty slots are not nodes.
///
/// Single writer during mining; a finished tree is safe for concurrent
/// reads.
class TTree {
public:
  /// Throws std::invalid_argument on universe_size == 0.
  explicit TTree(std::uint32_t universe_size);

  TTree(TTree&&) noexcept = default;
  TTree& operator=(TTree&&) noexcept = default;

  std::uint32_t universe_size() const noexcept { return universe_size_; }
  const TTreeMetrics& metrics() const noexcept { return metrics_; }

  /// Materializes the node for x with support 0. Level-wise mining
  /// guarantees the suffix path (x minus its smallest item) already
  /// exists; if it does not, that is a mining-order bug and a
  /// std::logic_error is thrown. Re-inserting an existing itemset is a
  /// no-op.
  void insert_candidate(const Itemset& x);

  /// support(x) += 1. Throws std::logic_error if x is not materialized.
  void increment_support(const Itemset& x);

  /// Support of x if materialized (and not pruned), nullopt otherwise.
  std::optional<std::uint64_t> support_of(const Itemset& x) const;

  /// Removes every depth-k node with support < min_count and returns the
  /// survivors (L_k) in lexicographic order. Peak node_count is
  /// unaffected; final_node_count shrinks.
  std::vector<Itemset> prune_level(std::size_t k, std::uint64_t min_count);

  /// All materialized itemsets with their supports, lexicographic.
  std::vector<std::pair<Itemset, std::uint64_t>> frequent_itemsets() const;

private:
  struct Node {
    std::uint64_t support = 0;
    // Slot j-1 holds the child extending the path with item j.
    std::vector<std::unique_ptr<Node>> children;
  };

  const Node* find(const Itemset& x) const noexcept;
  void note_materialized();
  static std::uint64_t subtree_size(const Node& node) noexcept;

  std::uint32_t universe_size_ = 0;
  std::vector<std::unique_ptr<Node>> top_;
  std::uint64_t live_nodes_ = 0;
  TTreeMetrics metrics_;
};

}  // namespace armine
