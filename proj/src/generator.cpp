#include "frim/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace frim {

QuantitativeDatabase random_small_database(std::mt19937_64& rng, const SmallDatabaseShape& shape) {
  std::uniform_int_distribution<std::size_t> tx_count(1, shape.max_transactions);
  std::uniform_int_distribution<std::size_t> item_count(1, shape.max_items);
  std::uniform_int_distribution<int> quantity(1, shape.max_quantity);
  std::bernoulli_distribution coin(0.5);

  const std::size_t items = item_count(rng);
  const std::size_t n = tx_count(rng);
  QuantitativeDatabase db;
  for (std::size_t t = 0; t < n; ++t) {
    QuantitativeDatabase::Row row;
    while (row.empty())
      for (std::size_t i = 0; i < items; ++i)
        if (coin(rng)) row.emplace_back(std::string(1, static_cast<char>('A' + i)), quantity(rng));
    db.add_transaction(row);
  }
  return db;
}

Thresholds random_band(std::mt19937_64& rng, std::size_t n) {
  const double total = static_cast<double>(n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double lo = unit(rng) * total * 0.6;
  double hi = lo + unit(rng) * (total - lo);
  // Half of the bands sit on the 0.2 grid that degrees of the default
  // membership function live on, so boundary ties actually occur.
  if (std::bernoulli_distribution(0.5)(rng)) {
    lo = std::round(lo * 5.0) / 5.0;
    hi = std::max(lo, std::round(hi * 5.0) / 5.0);
  }
  return {lo, hi};
}

QuantitativeDatabase synthetic_database(std::uint64_t seed, const SyntheticShape& shape) {
  std::mt19937_64 rng(seed);
  std::vector<double> weights(shape.items);
  for (std::size_t r = 0; r < shape.items; ++r)
    weights[r] = 1.0 / std::pow(static_cast<double>(r + 1), shape.zipf_exponent);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::geometric_distribution<int> extra(1.0 / std::max(1.0, shape.average_length));
  std::geometric_distribution<int> qty(0.25);

  std::vector<std::string> names(shape.items);
  for (std::size_t r = 0; r < shape.items; ++r) names[r] = std::to_string(r + 1);

  QuantitativeDatabase db;
  QuantitativeDatabase::Row row;
  std::unordered_set<std::size_t> basket;
  for (std::size_t t = 0; t < shape.transactions; ++t) {
    const std::size_t length =
        std::min<std::size_t>(shape.items, 1 + static_cast<std::size_t>(extra(rng)));
    basket.clear();
    row.clear();
    while (basket.size() < length) {
      const auto item = pick(rng);
      if (basket.insert(item).second)
        row.emplace_back(names[item], std::min(shape.max_quantity, 1 + qty(rng)));
    }
    db.add_transaction(row);
  }
  return db;
}

}  // namespace frim
