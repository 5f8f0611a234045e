#include "frim/running_example.hpp"

#include <sstream>
#include <string>

namespace frim {

std::string_view running_example_text() {
  return "A:3 B:5 D:10 E:9\n"
         "B:8 D:3\n"
         "A:3 B:8 D:9 F:5\n"
         "B:5 C:4 D:11 E:2\n"
         "B:7 C:3 D:5 F:3\n"
         "A:2 B:5 C:3 D:7\n"
         "A:2 B:4 D:9 F:2\n"
         "B:5 C:2 D:10 E:3\n";
}

QuantitativeDatabase running_example() {
  std::istringstream in{std::string(running_example_text())};
  return parse_database(in);
}

}  // namespace frim
