#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aim::verify {

struct Check {
  std::string suite;
  std::string name;
  double observed = 0;
  double expected = 0;
  double tol = 0;
  bool pass = false;
  std::string note;
};

/// Runs one of "table1", "jc", "mjc", "dirac" or "all".
/// Throws InvalidArgument for any other name.
std::vector<Check> run_suite(std::string_view suite);

}  // namespace aim::verify
