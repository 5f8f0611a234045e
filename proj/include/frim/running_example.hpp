#pragma once

#include <string_view>

#include "frim/dataset.hpp"

namespace frim {

/// Eight-transaction, six-item quantitative database used throughout the docs
/// and by `--demo`.
std::string_view running_example_text();
QuantitativeDatabase running_example();

}  // namespace frim
