#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace armine {

/// Item ids are positive integers; 0 is never a valid item.
using Item = std::uint32_t;

/// Error raised while reading a transaction file. line() is 1-based;
/// 0 means the error is not tied to a particular line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Exact non-negative rational. Construction normalizes (gcd-reduced,
/// zero stored as 0/1); comparisons cross-multiply in 128-bit so they are
/// value comparisons regardless of representation.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Ratio() = default;
  Ratio(std::uint64_t numerator, std::uint64_t denominator);

  double to_double() const noexcept;
  /// Fixed-point decimal with exactly `places` fractional digits,
  /// rounded half-up. Ratio(2,3).to_decimal(4) == "0.6667".
  std::string to_decimal(int places) const;
  /// Shortest decimal up to `max_places` digits, trailing zeros trimmed.
  std::string to_decimal_trimmed(int max_places = 6) const;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;
  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// Parses an unsigned decimal literal ("2", "0.25", ".5") into an exact
/// Ratio. No sign, no exponent. Throws std::invalid_argument on anything
/// else. Exactness matters: thresholds like 0.07 of 100 must resolve to
/// 7, which naive double arithmetic gets wrong.
Ratio parse_decimal(std::string_view text);

/// Canonical itemset: strictly ascending positive item ids, no duplicates.
/// All construction paths canonicalize, so two Itemsets compare equal iff
/// they denote the same set. Ordering is lexicographic on the id sequence.
class Itemset {
public:
  Itemset() = default;
  Itemset(std::initializer_list<Item> ids);
  /// Sorts and collapses duplicates. Throws std::invalid_argument on id 0.
  static Itemset from_items(std::vector<Item> ids);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::span<const Item> items() const noexcept { return items_; }
  Item operator[](std::size_t i) const noexcept { return items_[i]; }
  /// Largest id, 0 for the empty set.
  Item max_item() const noexcept { return items_.empty() ? 0 : items_.back(); }

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  bool contains(Item id) const noexcept;
  /// sub ⊆ *this. The empty set is contained in everything.
  bool contains_all(const Itemset& sub) const noexcept;

  Itemset union_with(const Itemset& other) const;
  Itemset minus(const Itemset& other) const;

  /// "1,2,5" with the default separator; empty string for the empty set.
  std::string to_string(char sep = ',') const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset&, const Itemset&) = default;

private:
  std::vector<Item> items_;
};

/// Immutable ordered list of transactions over an item universe of size m.
/// Transaction index is the implicit tid. Safe for concurrent reads.
class TransactionDb {
public:
  TransactionDb() = default;
  /// Throws std::invalid_argument if any transaction holds an item
  /// greater than universe_size.
  TransactionDb(std::uint32_t universe_size, std::vector<Itemset> transactions);

  std::uint32_t universe_size() const noexcept { return universe_size_; }
  std::size_t size() const noexcept { return transactions_.size(); }
  const Itemset& operator[](std::size_t i) const noexcept { return transactions_[i]; }
  const std::vector<Itemset>& transactions() const noexcept { return transactions_; }

  friend bool operator==(const TransactionDb&, const TransactionDb&) = default;

private:
  std::uint32_t universe_size_ = 0;
  std::vector<Itemset> transactions_;
};

/// Minimum-support threshold, either a fraction of a reference database
/// or an absolute transaction count. resolve() binds it to a database
/// size: ceil(fraction * n) for fractions (computed exactly in integer
/// arithmetic), the count itself otherwise. An itemset is frequent iff
/// its support >= the resolved count.
class SupportThreshold {
public:
  /// Absolute count 1: everything observed is frequent.
  SupportThreshold() = default;
  /// Requires 0 < f <= 1.
  static SupportThreshold fraction(Ratio f);
  /// Requires count >= 1.
  static SupportThreshold absolute(std::uint64_t count);

  bool is_fraction() const noexcept { return is_fraction_; }
  /// Throws std::invalid_argument when the resolved count would be < 1
  /// (fraction against an empty reference database).
  std::uint64_t resolve(std::size_t reference_db_size) const;

private:
  bool is_fraction_ = false;
  Ratio fraction_{};
  std::uint64_t absolute_ = 1;
};

/// Transaction file format: one transaction per line, items as base-10
/// positive integers separated by ASCII whitespace. Blank lines and lines
/// whose first non-blank character is '#' are ignored. An optional first
/// line "#universe <m>" fixes the universe size; otherwise it is the
/// largest id seen. Duplicate items on a line collapse silently.
TransactionDb parse_transactions(std::istream& in, bool require_non_empty = false);
TransactionDb parse_transactions(std::string_view text, bool require_non_empty = false);
TransactionDb load_transaction_file(const std::string& path, bool require_non_empty = false);

/// Writes the "#universe <m>" header followed by one line per transaction.
/// parse_transactions(serialize_transactions(db)) == db.
void serialize_transactions(const TransactionDb& db, std::ostream& out);
std::string serialize_transactions(const TransactionDb& db);

/// Brute-force support: number of transactions containing x, by linear
/// scan. This is the independent oracle the test suites compare mining
/// output against; the miner itself never calls it.
std::uint64_t support_count(const TransactionDb& db, const Itemset& x);

/// Working database D': exactly the transactions containing every id in
/// user_attrs (conjunctive), original order and universe size preserved.
/// Throws std::invalid_argument on empty user_attrs or ids outside the
/// universe.
TransactionDb filter_database(const TransactionDb& db, const Itemset& user_attrs);

}  // namespace armine
