#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "padicsum/poly.hpp"
#include "padicsum/summation.hpp"

namespace padicsum {

/// B_0 .. B_nmax with the B_1 = -1/2 convention.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<BigRat> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool covers(std::size_t n) const noexcept { return n < values_.size(); }
  // Throws std::out_of_range.
  const BigRat& operator[](std::size_t n) const { return values_.at(n); }
  std::span<const BigRat> values() const noexcept { return values_; }

 private:
  std::vector<BigRat> values_;
};

/// From sum_{j=0}^{n-1} C(n,j) B_j = 0 (n >= 2), B_0 = 1.
BernoulliTable bernoulli_numbers(unsigned nmax);

/// Volkenborn integral of a polynomial over Z_p: sum_l coeff_l * B_l.
/// Throws std::out_of_range when the table is shorter than deg P + 1.
BigRat volkenborn_poly(const IntPoly& P, const BernoulliTable& table);

class WorkLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// p^-m * sum_{j=0}^{p^m - 1} P(j), by direct summation. Throws
/// WorkLimitExceeded if p^m exceeds work_limit, std::invalid_argument if m == 0.
BigRat volkenborn_level(const IntPoly& P, const Prime& p, unsigned m, std::uint64_t work_limit = padicsum::work_limit());

struct IdentitySides {
  BigRat lhs;
  BigRat rhs;
};

/// Image of the finite identity under x^m -> B_m:
///   lhs = sum_{n<N} n! [n^k B_{n+k} + sum_l U_{k,l} B_{n+l}]
///   rhs = sum_l V_{k,l} B_l + N! sum_l A_{k-1,l}(N) B_{N+l}
/// Needs B_0 .. B_{N+k-1}; throws std::out_of_range otherwise.
IdentitySides bernoulli_identity_partial(unsigned k, unsigned long N, const BernoulliTable& table,
                                         SummationFamily& family = shared_family());

/// partial = lhs(N), target = volkenborn_poly(V_k); the guaranteed exponent is
/// factorial_norm_exponent(N, p) - 1, the slack coming from |B_n|_p <= p.
SumCertificate bernoulli_series_certificate(unsigned k, const Prime& p, unsigned long N, const BernoulliTable& table,
                                            SummationFamily& family = shared_family());

}  // namespace padicsum
