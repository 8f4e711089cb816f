#include "armine/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

namespace armine {

namespace {

std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

using u128 = unsigned __int128;

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(with_line(line, message)), line_(line) {}

// ---------------------------------------------------------------------------
// Ratio

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator)
    : num(numerator), den(denominator) {
  if (den == 0) throw std::invalid_argument("ratio denominator must be nonzero");
  if (num == 0) {
    den = 1;
  } else {
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
}

double Ratio::to_double() const noexcept {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
  const u128 lhs = u128(a.num) * b.den;
  const u128 rhs = u128(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Ratio::to_decimal(int places) const {
  if (places < 0 || places > 18) throw std::invalid_argument("decimal places out of range");
  u128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // Round half-up in exact integer arithmetic.
  const u128 scaled = (u128(num) * scale + den / 2) / den;
  const std::uint64_t whole = static_cast<std::uint64_t>(scaled / scale);
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::uint64_t frac = static_cast<std::uint64_t>(scaled % scale);
    std::string digits = std::to_string(frac);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string Ratio::to_decimal_trimmed(int max_places) const {
  std::string out = to_decimal(max_places);
  if (out.find('.') == std::string::npos) return out;
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

Ratio parse_decimal(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  std::string_view whole = text;
  std::string_view frac;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) throw bad();
  const auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(whole) || !all_digits(frac)) throw bad();
  if (whole.size() + frac.size() > 18) {
    throw std::invalid_argument("decimal number too long: '" + std::string(text) + "'");
  }
  std::uint64_t num = 0;
  for (char c : whole) num = num * 10 + static_cast<std::uint64_t>(c - '0');
  std::uint64_t den = 1;
  for (char c : frac) {
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
    den *= 10;
  }
  return Ratio(num, den);
}

// ---------------------------------------------------------------------------
// Itemset

Itemset::Itemset(std::initializer_list<Item> ids)
    : Itemset(from_items(std::vector<Item>(ids))) {}

Itemset Itemset::from_items(std::vector<Item> ids) {
  for (Item id : ids) {
    if (id == 0) throw std::invalid_argument("item ids start at 1");
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Itemset set;
  set.items_ = std::move(ids);
  return set;
}

bool Itemset::contains(Item id) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), id);
}

bool Itemset::contains_all(const Itemset& sub) const noexcept {
  return std::includes(items_.begin(), items_.end(), sub.items_.begin(), sub.items_.end());
}

Itemset Itemset::union_with(const Itemset& other) const {
  std::vector<Item> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(merged));
  Itemset set;
  set.items_ = std::move(merged);
  return set;
}

Itemset Itemset::minus(const Itemset& other) const {
  std::vector<Item> rest;
  rest.reserve(items_.size());
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(rest));
  Itemset set;
  set.items_ = std::move(rest);
  return set;
}

std::string Itemset::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(items_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// TransactionDb

TransactionDb::TransactionDb(std::uint32_t universe_size, std::vector<Itemset> transactions)
    : universe_size_(universe_size), transactions_(std::move(transactions)) {
  for (const Itemset& t : transactions_) {
    if (t.max_item() > universe_size_) {
      throw std::invalid_argument("item " + std::to_string(t.max_item()) +
                                  " exceeds universe size " + std::to_string(universe_size_));
    }
  }
}

// ---------------------------------------------------------------------------
// SupportThreshold

SupportThreshold SupportThreshold::fraction(Ratio f) {
  if (f.num == 0) throw std::invalid_argument("support fraction must be > 0");
  if (f > Ratio(1, 1)) throw std::invalid_argument("support fraction must be <= 1");
  SupportThreshold t;
  t.is_fraction_ = true;
  t.fraction_ = f;
  return t;
}

SupportThreshold SupportThreshold::absolute(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("absolute support count must be >= 1");
  SupportThreshold t;
  t.absolute_ = count;
  return t;
}

std::uint64_t SupportThreshold::resolve(std::size_t reference_db_size) const {
  if (!is_fraction_) return absolute_;
  // ceil(num * n / den), exact.
  const u128 count = (u128(fraction_.num) * reference_db_size + fraction_.den - 1) / fraction_.den;
  if (count < 1) {
    throw std::invalid_argument("fractional threshold resolves below 1 (empty reference database)");
  }
  return static_cast<std::uint64_t>(count);
}

// ---------------------------------------------------------------------------
// Transaction file format

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end()) {
    throw ParseError(line_no,
                     std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

TransactionDb parse_transactions(std::istream& in, bool require_non_empty) {
  std::vector<Itemset> transactions;
  Item max_seen = 0;
  bool have_header = false;
  std::uint32_t header_universe = 0;

  std::string line;
  std::size_t line_no = 0;
  std::vector<Item> buf;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    std::size_t first = 0;
    while (first < view.size() && is_space(view[first])) ++first;
    view.remove_prefix(first);
    if (view.empty()) continue;
    if (view.front() == '#') {
      // "#universe <m>" is only honored as the first line; any other
      // '#' line is a comment.
      if (line_no == 1) {
        const auto tokens = tokenize(view.substr(1));
        if (!tokens.empty() && tokens[0] == "universe") {
          if (tokens.size() != 2) {
            throw ParseError(line_no, "universe header needs exactly one integer");
          }
          const std::uint64_t m = parse_uint(tokens[1], line_no, "a universe size");
          if (m > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError(line_no, "universe size out of range");
          }
          have_header = true;
          header_universe = static_cast<std::uint32_t>(m);
        }
      }
      continue;
    }
    buf.clear();
    for (std::string_view token : tokenize(view)) {
      const std::uint64_t id = parse_uint(token, line_no, "a positive item id");
      if (id == 0) throw ParseError(line_no, "item ids start at 1");
      if (id > std::numeric_limits<Item>::max()) {
        throw ParseError(line_no, "item id out of range: " + std::string(token));
      }
      if (have_header && id > header_universe) {
        throw ParseError(line_no, "item " + std::string(token) +
                                      " exceeds declared universe " +
                                      std::to_string(header_universe));
      }
      buf.push_back(static_cast<Item>(id));
    }
    if (buf.empty()) continue;
    Itemset t = Itemset::from_items(buf);
    max_seen = std::max(max_seen, t.max_item());
    transactions.push_back(std::move(t));
  }
  if (require_non_empty && transactions.empty()) {
    throw ParseError(0, "input contains no transactions");
  }
  const std::uint32_t universe = have_header ? header_universe : max_seen;
  return TransactionDb(universe, std::move(transactions));
}

TransactionDb parse_transactions(std::string_view text, bool require_non_empty) {
  std::istringstream in{std::string(text)};
  return parse_transactions(in, require_non_empty);
}

TransactionDb load_transaction_file(const std::string& path, bool require_non_empty) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open transaction file: " + path);
  return parse_transactions(in, require_non_empty);
}

void serialize_transactions(const TransactionDb& db, std::ostream& out) {
  out << "#universe " << db.universe_size() << '\n';
  for (const Itemset& t : db.transactions()) {
    out << t.to_string(' ') << '\n';
  }
}

std::string serialize_transactions(const TransactionDb& db) {
  std::ostringstream out;
  serialize_transactions(db, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Oracle and working-database filter

std::uint64_t support_count(const TransactionDb& db, const Itemset& x) {
  std::uint64_t count = 0;
  for (const Itemset& t : db.transactions()) {
    if (t.contains_all(x)) ++count;
  }
  return count;
}

TransactionDb filter_database(const TransactionDb& db, const Itemset& user_attrs) {
  if (user_attrs.empty()) {
    throw std::invalid_argument("user attributes must be non-empty (plain mining needs none)");
  }
  if (user_attrs.max_item() > db.universe_size()) {
    throw std::invalid_argument("attribute " + std::to_string(user_attrs.max_item()) +
                                " outside universe of size " +
                                std::to_string(db.universe_size()));
  }
  std::vector<Itemset> kept;
  for (const Itemset& t : db.transactions()) {
    if (t.contains_all(user_attrs)) kept.push_back(t);
  }
  return TransactionDb(db.universe_size(), std::move(kept));
}

}  // namespace armine
