#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "armine/datagen.hpp"

using namespace armine;

TEST_CASE("generation basics") {
  SUBCASE("zero transactions") {
    const TransactionDb db = generate({.num_transactions = 0, .universe_size = 7});
    CHECK(db.size() == 0);
    CHECK(db.universe_size() == 7);
  }
  SUBCASE("shape of a full run") {
    const TransactionDb db =
        generate({.num_transactions = 2000, .universe_size = 7, .density = 0.5, .seed = 9});
    REQUIRE(db.size() == 2000);
    for (const Itemset& t : db.transactions()) {
      CHECK_FALSE(t.empty());
      CHECK(t.max_item() <= 7);
    }
  }
  SUBCASE("config validation") {
    CHECK_THROWS_AS(generate({.universe_size = 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({.universe_size = 7, .density = 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({.universe_size = 7, .density = 1.0}), std::invalid_argument);
  }
}

TEST_CASE("generation is a pure function of the config") {
  const GenConfig config{.num_transactions = 1000, .universe_size = 7, .density = 0.5, .seed = 5};
  CHECK(generate(config) == generate(config));

  GenConfig other = config;
  other.seed = 6;
  CHECK(generate(config) != generate(other));
}

TEST_CASE("frozen draws match the documented contract") {
  // Expected transactions computed with an out-of-process mt19937-64
  // reference implementation (seed 42, m=7, d=0.5, 53-bit uniforms,
  // ascending item order, restart on empty).
  const TransactionDb db =
      generate({.num_transactions = 6, .universe_size = 7, .density = 0.5, .seed = 42});
  const std::vector<Itemset> expected{
      Itemset{4, 6},          Itemset{1, 2, 3, 4},       Itemset{4, 5, 6},
      Itemset{1, 2, 3, 4, 5, 7}, Itemset{2, 4, 7},       Itemset{3, 4, 5, 7},
  };
  CHECK(db.transactions() == expected);

  const TransactionDb other =
      generate({.num_transactions = 6, .universe_size = 7, .density = 0.5, .seed = 1});
  const std::vector<Itemset> expected_other{
      Itemset{1, 2, 3, 4, 5, 7}, Itemset{1, 4, 7}, Itemset{1, 2, 3, 5, 6, 7},
      Itemset{2, 3, 4, 5, 6, 7}, Itemset{4, 6, 7}, Itemset{3, 4, 5, 7},
  };
  CHECK(other.transactions() == expected_other);
}

TEST_CASE("marginal item frequency concentrates around the density") {
  // At m=7, d=0.5 the redraw-on-empty correction is ~0.004, well inside
  // the +-0.01 band at n=50000.
  const std::size_t n = 50000;
  const TransactionDb db =
      generate({.num_transactions = n, .universe_size = 7, .density = 0.5, .seed = 1234});
  std::vector<std::size_t> hits(8, 0);
  for (const Itemset& t : db.transactions()) {
    for (Item id : t) ++hits[id];
  }
  for (Item id = 1; id <= 7; ++id) {
    const double fraction = static_cast<double>(hits[id]) / static_cast<double>(n);
    CHECK(fraction > 0.49);
    CHECK(fraction < 0.51);
  }

  // Larger universe, lower density: correction is negligible there too.
  const TransactionDb sparse =
      generate({.num_transactions = n, .universe_size = 20, .density = 0.3, .seed = 77});
  std::vector<std::size_t> sparse_hits(21, 0);
  for (const Itemset& t : sparse.transactions()) {
    for (Item id : t) ++sparse_hits[id];
  }
  for (Item id = 1; id <= 20; ++id) {
    const double fraction = static_cast<double>(sparse_hits[id]) / static_cast<double>(n);
    CHECK(fraction > 0.29);
    CHECK(fraction < 0.31);
  }
}
