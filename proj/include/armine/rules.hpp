#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "armine/core.hpp"

namespace armine {

/// antecedent -> consequent, non-empty and disjoint. support is the
/// absolute count of antecedent ∪ consequent; confidence is the exact
/// ratio support(antecedent ∪ consequent) / support(antecedent).
struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  std::uint64_t support = 0;
  Ratio confidence;

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

/// support_union / support_antecedent as an exact ratio. Throws
/// std::invalid_argument when the antecedent support is zero (confidence
/// undefined) and std::logic_error when support_union exceeds it (a
/// subset can never be rarer than its superset).
Ratio confidence(std::uint64_t support_union, std::uint64_t support_antecedent);

/// Enumerates, for every frequent X with |X| >= 2 and every non-empty
/// proper subset Y of X, the rule Y -> (X-Y), keeping those with
/// confidence >= min_conf (inclusive, compared exactly) whose antecedent
/// contains required_antecedent when one is given. The input must be
/// downward-closed with supports (every antecedent must be present);
/// a missing antecedent throws std::logic_error. Output is sorted by
/// (antecedent, consequent).
std::vector<AssociationRule> generate_rules(
    std::span<const std::pair<Itemset, std::uint64_t>> frequent, Ratio min_conf,
    const std::optional<Itemset>& required_antecedent = std::nullopt);

}  // namespace armine
