#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padicsum/numeric.hpp"
#include "padicsum/poly.hpp"

namespace padicsum::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'cafe'1234ULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Nonzero denominator, small numerator.
inline BigRat random_rational(long num_bound = 50, long den_bound = 30) {
  BigRat q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

inline IntPoly random_poly(long max_degree = 5, long coeff_bound = 20) {
  std::vector<BigInt> c(static_cast<std::size_t>(uniform(0, max_degree) + 1));
  for (auto& v : c) v = uniform(-coeff_bound, coeff_bound);
  return IntPoly(std::move(c));
}

inline IntPoly xpoly(std::vector<long> little_endian) {
  std::vector<BigInt> c(little_endian.begin(), little_endian.end());
  return IntPoly(std::move(c));
}

inline NPoly npoly(std::vector<long> little_endian) {
  std::vector<BigInt> c(little_endian.begin(), little_endian.end());
  return NPoly(std::move(c));
}

}  // namespace padicsum::testing
