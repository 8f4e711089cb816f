#include "armine/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace armine {

Ratio confidence(std::uint64_t support_union, std::uint64_t support_antecedent) {
  if (support_antecedent == 0) {
    throw std::invalid_argument("confidence undefined: antecedent support is zero");
  }
  if (support_union > support_antecedent) {
    throw std::logic_error("support of a superset exceeds support of its subset");
  }
  return Ratio(support_union, support_antecedent);
}

std::vector<AssociationRule> generate_rules(
    std::span<const std::pair<Itemset, std::uint64_t>> frequent, Ratio min_conf,
    const std::optional<Itemset>& required_antecedent) {
  if (min_conf > Ratio(1, 1)) throw std::invalid_argument("minimum confidence must be <= 1");

  std::vector<std::pair<Itemset, std::uint64_t>> index(frequent.begin(), frequent.end());
  std::sort(index.begin(), index.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const auto support_of = [&](const Itemset& s) -> const std::uint64_t* {
    const auto it = std::lower_bound(
        index.begin(), index.end(), s,
        [](const auto& entry, const Itemset& key) { return entry.first < key; });
    if (it == index.end() || it->first != s) return nullptr;
    return &it->second;
  };

  std::vector<AssociationRule> rules;
  std::vector<Item> lhs;
  std::vector<Item> rhs;
  for (const auto& [x, support_x] : frequent) {
    if (x.size() < 2) continue;
    const auto items = x.items();
    const std::uint64_t full = std::uint64_t{1} << items.size();
    for (std::uint64_t mask = 1; mask + 1 < full; ++mask) {
      lhs.clear();
      rhs.clear();
      for (std::size_t bit = 0; bit < items.size(); ++bit) {
        ((mask >> bit) & 1 ? lhs : rhs).push_back(items[bit]);
      }
      Itemset antecedent = Itemset::from_items(lhs);
      if (required_antecedent && !antecedent.contains_all(*required_antecedent)) continue;

      const std::uint64_t* support_y = support_of(antecedent);
      if (support_y == nullptr) {
        throw std::logic_error("frequent input is not downward-closed: no support for {" +
                               antecedent.to_string() + "}");
      }
      const Ratio conf = confidence(support_x, *support_y);
      if (conf >= min_conf) {
        rules.push_back({std::move(antecedent), Itemset::from_items(rhs), support_x, conf});
      }
    }
  }

  std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  return rules;
}

}  // namespace armine
