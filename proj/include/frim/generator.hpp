#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "frim/dataset.hpp"
#include "frim/miner.hpp"

namespace frim {

struct SmallDatabaseShape {
  std::size_t max_transactions = 8;
  std::size_t max_items = 5;
  int max_quantity = 12;
};

/// Random database within `shape`: 1..max_transactions rows, each a non-empty
/// subset of items named A, B, C, ... with quantities 1..max_quantity.
QuantitativeDatabase random_small_database(std::mt19937_64& rng,
                                           const SmallDatabaseShape& shape = {});

/// Random absolute band [lo, hi) with 0 <= lo <= hi <= n.
Thresholds random_band(std::mt19937_64& rng, std::size_t n);

struct SyntheticShape {
  std::size_t transactions = 88162;
  std::size_t items = 16470;
  double average_length = 10.3;
  double zipf_exponent = 1.0;
  int max_quantity = 31;
};

/// Sparse retail-like database: item popularity follows a Zipf law, basket
/// sizes are geometric around `average_length`, quantities are skewed toward
/// small values.
QuantitativeDatabase synthetic_database(std::uint64_t seed, const SyntheticShape& shape = {});

}  // namespace frim
