#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padicsum/padic.hpp"
#include "padicsum/recurrences.hpp"

namespace padicsum {

/// !n = sum_{j=0}^{n-1} j!
BigInt left_factorial(std::uint64_t n);

/// Walks (n, !n, n!) upward from n = 0 with one multiply and one add per step.
class LeftFactorialWalker {
 public:
  std::uint64_t n() const noexcept { return n_; }
  const BigInt& left_factorial() const noexcept { return left_; }
  const BigInt& factorial() const noexcept { return fact_; }
  void advance();

 private:
  std::uint64_t n_ = 0;
  BigInt left_ = 0;
  BigInt fact_ = 1;
};

/// Outcome of the Kurepa scans. A failure is a structured finding, not an error:
/// the hypothesis gcd(!n, n!) = 2 for all n >= 2 is open.
struct KurepaReport {
  std::uint64_t gcd_bound = 0;  // scanned 2 <= n <= gcd_bound
  std::uint64_t gcd_ok_up_to = 0;
  std::optional<std::uint64_t> first_gcd_failure;

  std::uint64_t digit_bound = 0;  // scanned odd primes p <= digit_bound
  std::uint64_t digit_checked_primes = 0;
  std::optional<std::uint64_t> first_digit_failure;

  bool holds() const noexcept { return !first_gcd_failure && !first_digit_failure; }
};

/// Checks gcd(!n, n!) == 2 for 2 <= n <= nmax, stopping at the first failure.
/// Throws std::invalid_argument if nmax < 2.
KurepaReport kurepa_gcd_scan(std::uint64_t nmax);

/// 0th p-adic digit of sum_{j>=0} j!, i.e. (sum_{j<p} j!) mod p.
std::uint64_t kurepa_digit(const Prime& p);

/// kurepa_digit(p) != 0 for every odd prime p <= pmax.
KurepaReport kurepa_digit_scan(std::uint64_t pmax);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// For k = 1..kmax: -V_k(1), -V_k(-1), U_k(1), -U_k(-1).
struct IntegerSequences {
  std::vector<BigInt> neg_v_at_one;
  std::vector<BigInt> neg_v_at_minus_one;
  std::vector<BigInt> u_at_one;
  std::vector<BigInt> neg_u_at_minus_one;
};

IntegerSequences integer_sequences(unsigned kmax, SummationFamily& family = shared_family());

}  // namespace padicsum
