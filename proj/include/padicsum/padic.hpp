#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicsum/numeric.hpp"

namespace padicsum {

bool is_prime(std::uint64_t n);

/// A rational prime. Construction from a composite (or 0, 1) throws
/// std::invalid_argument, so every downstream valuation sees a real prime.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }

  friend bool operator==(const Prime&, const Prime&) = default;
  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t p_;
};

/// p-adic valuation exponent: a finite integer or +infinity (valuation of 0).
/// Ordering places infinity above every finite value.
class ValExponent {
 public:
  static ValExponent infinite() { return ValExponent(); }
  static ValExponent finite(long v) { return ValExponent(v); }

  bool is_infinite() const noexcept { return !v_.has_value(); }
  bool is_finite() const noexcept { return v_.has_value(); }
  // Throws std::logic_error when infinite.
  long value() const;

  std::string to_string() const;

  friend bool operator==(const ValExponent&, const ValExponent&) = default;
  friend std::strong_ordering operator<=>(const ValExponent& a, const ValExponent& b);
  friend ValExponent operator+(const ValExponent& a, const ValExponent& b);

 private:
  ValExponent() = default;
  explicit ValExponent(long v) : v_(v) {}

  std::optional<long> v_;
};

/// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, const Prime& p);

/// v_p(n!) by Legendre's floor sum [n/p] + [n/p^2] + ...
std::uint64_t legendre_valuation(std::uint64_t n, const Prime& p);

/// Exponent e with |n!|_p = p^-e, computed as (n - s_n)/(p - 1).
/// Aborts if the division is inexact (that can only be a digit_sum bug).
std::uint64_t factorial_norm_exponent(std::uint64_t n, const Prime& p);

ValExponent vp(const BigInt& a, const Prime& p);
ValExponent vp(const BigRat& q, const Prime& p);

/// True iff |x|_p <= 1, i.e. x lies in Z_p, the convergence region of
/// sum n! P(n; x) x^n.
bool in_convergence_domain(const BigRat& x, const Prime& p);

ValExponent padic_distance_exponent(const BigRat& a, const BigRat& b, const Prime& p);

/// Truncated canonical p-adic expansion q = p^valuation * sum_i digits[i] p^i.
/// digits[0] != 0 unless the value is zero; a zero value has valuation 0 and
/// all-zero digits.
struct PadicExpansion {
  Prime p;
  long valuation = 0;
  std::vector<std::uint64_t> digits;
  long precision = 0;

  bool is_zero() const;
  // p^valuation * sum_i digits[i] p^i as an exact rational.
  BigRat reconstruct() const;
};

/// Throws std::invalid_argument if precision <= 0.
PadicExpansion padic_expand(const BigRat& q, const Prime& p, long precision);

}  // namespace padicsum
