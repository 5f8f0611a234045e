#pragma once

#include <string>

namespace frim {

// Rounds to the nearest multiple of 1e-9 and prints the shortest decimal
// that round-trips, so accumulated noise such as 2.4000000000000004 renders
// as "2.4". Every text, CSV, JSON and dump writer goes through this.
std::string format_number(double value);

// The rounded value itself, for JSON writers.
double canonical_number(double value);

}  // namespace frim
