#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padicsum {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Exact text form: "a" for integers, "a/b" otherwise (lowest terms, b > 0).
std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

// Accepts "a" or "a/b" with an optional leading sign. Throws std::invalid_argument.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

bool is_integer(const BigRat& v);

// Upper bound on loop trip counts for the brute-force paths (Volkenborn
// level sums, Kurepa scans). Read once from PADICSUM_WORK_LIMIT.
inline constexpr std::uint64_t kDefaultWorkLimit = 50'000'000;
std::uint64_t work_limit();

}  // namespace padicsum
