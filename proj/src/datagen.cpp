#include "armine/datagen.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace armine {

TransactionDb generate(const GenConfig& config) {
  if (config.universe_size == 0) throw std::invalid_argument("universe size must be >= 1");
  if (!(config.density > 0.0) || !(config.density < 1.0)) {
    throw std::invalid_argument("density must lie strictly between 0 and 1");
  }

  std::mt19937_64 rng(config.seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  const auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * kScale; };

  std::vector<Itemset> transactions;
  transactions.reserve(config.num_transactions);
  std::vector<Item> buf;
  for (std::uint64_t n = 0; n < config.num_transactions; ++n) {
    do {
      buf.clear();
      for (Item id = 1; id <= config.universe_size; ++id) {
        if (uniform() < config.density) buf.push_back(id);
      }
    } while (buf.empty());
    transactions.push_back(Itemset::from_items(buf));
  }
  return TransactionDb(config.universe_size, std::move(transactions));
}

}  // namespace armine
