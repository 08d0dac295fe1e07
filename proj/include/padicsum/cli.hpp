#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "padicsum/numeric.hpp"

namespace padicsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed certificate or Kurepa counterexample
inline constexpr int kExitUsage = 2;

/// Parses "a..b" (inclusive integer range), comma lists, or a mix such as
/// "-3..3,1/2". Throws std::invalid_argument.
std::vector<BigRat> parse_rational_set(std::string_view spec);
std::vector<long> parse_integer_set(std::string_view spec);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicsum::cli
