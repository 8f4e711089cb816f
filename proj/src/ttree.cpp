#include "armine/ttree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace armine {

TTree::TTree(std::uint32_t universe_size) : universe_size_(universe_size) {
  if (universe_size == 0) throw std::invalid_argument("universe size must be >= 1");
  top_.resize(universe_size);
}

void TTree::note_materialized() {
  ++live_nodes_;
  metrics_.node_count = std::max(metrics_.node_count, live_nodes_);
  metrics_.final_node_count = live_nodes_;
}

std::uint64_t TTree::subtree_size(const Node& node) noexcept {
  std::uint64_t total = 1;
  for (const auto& child : node.children) {
    if (child) total += subtree_size(*child);
  }
  return total;
}

const TTree::Node* TTree::find(const Itemset& x) const noexcept {
  if (x.empty() || x.max_item() > universe_size_) return nullptr;
  const std::size_t k = x.size();
  const Node* cur = top_[x[k - 1] - 1].get();
  for (std::size_t idx = k - 1; cur != nullptr && idx > 0; --idx) {
    const Item item = x[idx - 1];
    if (item > cur->children.size()) return nullptr;
    cur = cur->children[item - 1].get();
  }
  return cur;
}

void TTree::insert_candidate(const Itemset& x) {
  if (x.empty()) throw std::logic_error("cannot insert the empty itemset");
  if (x.max_item() > universe_size_) {
    throw std::logic_error("item " + std::to_string(x.max_item()) + " outside universe of size " +
                           std::to_string(universe_size_));
  }
  const std::size_t k = x.size();
  if (k == 1) {
    auto& slot = top_[x[0] - 1];
    if (!slot) {
      slot = std::make_unique<Node>();
      note_materialized();
    }
    return;
  }
  // Walk the suffix path {x[1], ..., x[k-1]}; it must already exist.
  Node* cur = top_[x[k - 1] - 1].get();
  for (std::size_t idx = k - 1; idx > 1; --idx) {
    const Item item = x[idx - 1];
    if (cur == nullptr || item > cur->children.size()) cur = nullptr;
    else cur = cur->children[item - 1].get();
    if (cur == nullptr) break;
  }
  if (cur == nullptr) {
    throw std::logic_error("missing parent path for candidate {" + x.to_string() +
                           "}: candidates must be inserted level by level");
  }
  if (cur->children.empty()) cur->children.resize(x[1] - 1);
  auto& slot = cur->children[x[0] - 1];
  if (!slot) {
    slot = std::make_unique<Node>();
    note_materialized();
  }
}

void TTree::increment_support(const Itemset& x) {
  Node* node = const_cast<Node*>(find(x));
  if (node == nullptr) {
    throw std::logic_error("support increment on absent itemset {" + x.to_string() + "}");
  }
  ++node->support;
  ++metrics_.update_count;
}

std::optional<std::uint64_t> TTree::support_of(const Itemset& x) const {
  const Node* node = find(x);
  if (node == nullptr) return std::nullopt;
  return node->support;
}

std::vector<Itemset> TTree::prune_level(std::size_t k, std::uint64_t min_count) {
  if (k == 0) throw std::logic_error("levels start at 1");
  std::vector<Itemset> survivors;
  std::vector<Item> path;  // items from the top downward, descending

  auto visit = [&](auto&& self, std::vector<std::unique_ptr<Node>>& slots,
                   std::size_t depth) -> void {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      auto& slot = slots[i];
      if (!slot) continue;
      path.push_back(static_cast<Item>(i + 1));
      if (depth == k) {
        if (slot->support < min_count) {
          live_nodes_ -= subtree_size(*slot);
          slot.reset();
        } else {
          std::vector<Item> items(path.rbegin(), path.rend());
          survivors.push_back(Itemset::from_items(std::move(items)));
        }
      } else {
        self(self, slot->children, depth + 1);
      }
      path.pop_back();
    }
  };
  visit(visit, top_, 1);

  metrics_.final_node_count = live_nodes_;
  std::sort(survivors.begin(), survivors.end());
  return survivors;
}

std::vector<std::pair<Itemset, std::uint64_t>> TTree::frequent_itemsets() const {
  std::vector<std::pair<Itemset, std::uint64_t>> out;
  std::vector<Item> path;

  auto visit = [&](auto&& self, const std::vector<std::unique_ptr<Node>>& slots) -> void {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& slot = slots[i];
      if (!slot) continue;
      path.push_back(static_cast<Item>(i + 1));
      std::vector<Item> items(path.rbegin(), path.rend());
      out.emplace_back(Itemset::from_items(std::move(items)), slot->support);
      self(self, slot->children);
      path.pop_back();
    }
  };
  visit(visit, top_);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace armine
