#pragma once

#include <cstdint>

#include "armine/core.hpp"

namespace armine {

/// Synthetic transaction generator configuration. Each item 1..m is
/// included in a transaction independently with probability `density`;
/// an all-miss draw is redrawn from scratch, so transactions are never
/// empty.
struct GenConfig {
  std::uint64_t num_transactions = 0;
  std::uint32_t universe_size = 7;
  double density = 0.5;  // strictly between 0 and 1
  std::uint64_t seed = 0;
};

/// Deterministic generation: output is a pure function of the config,
/// identical across runs and platforms. Draw contract (fixed so seeds
/// stay meaningful): std::mt19937_64 seeded with config.seed; items are
/// consulted in ascending id order, one uniform per item produced as
/// (word >> 11) * 2^-53; an empty transaction restarts its draw loop.
/// Throws std::invalid_argument on universe_size == 0 or density
/// outside (0,1).
TransactionDb generate(const GenConfig& config);

}  // namespace armine
