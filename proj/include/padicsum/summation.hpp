#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicsum/padic.hpp"
#include "padicsum/recurrences.hpp"

namespace padicsum {

/// Raised when a p-adic certificate is requested outside the region where
/// the series converges to an integer-invariant sum.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// S_k(N; x) = sum_{n=0}^{N-1} n! n^k x^n with 0^0 = 1.
BigRat partial_sum_Sk(unsigned k, unsigned long N, const BigRat& x);

/// sum_{n=0}^{N-1} n! [n^k x^k + U_k(x)] x^n.
BigRat identity_lhs(unsigned k, unsigned long N, const BigRat& x, SummationFamily& family = shared_family());
/// V_k(x) + N! x^N A_{k-1}(N; x).
BigRat identity_rhs(unsigned k, unsigned long N, const BigRat& x, SummationFamily& family = shared_family());

struct IdentityCheck {
  unsigned k = 0;
  unsigned long N = 0;
  BigRat x;
  BigRat lhs;
  BigRat rhs;
  bool ok = false;
};

/// Evaluates both sides of the finite factorial-series identity exactly.
/// Any rational x is accepted; ok == false would indicate a bug.
IdentityCheck verify_identity(unsigned k, unsigned long N, const BigRat& x,
                              SummationFamily& family = shared_family());

/// The common p-adic sum V_k(x) of sum n! [n^k x^k + U_k(x)] x^n, identical
/// for every prime when x is an integer.
BigRat invariant_sum(unsigned k, const BigInt& x, SummationFamily& family = shared_family());

/// Exact witness that a truncated series is p-adically close to its sum.
/// tail is the remainder target - partial; for the power series it equals
/// -N! x^N A_{k-1}(N; x), computed independently of partial.
struct SumCertificate {
  std::string series;  // "power", "combo" or "bernoulli"
  unsigned k = 0;
  unsigned long N = 0;
  std::optional<BigRat> x;  // absent for the Bernoulli series
  Prime p;
  BigRat partial;
  BigRat target;
  BigRat tail;
  ValExponent distance_exponent = ValExponent::infinite();
  ValExponent bound_exponent = ValExponent::infinite();
  bool ok = false;
};

/// Certificate for sum n! [n^k x^k + U_k(x)] x^n truncated at N terms.
/// Throws DomainError when x is not an integer (and so outside Z for the
/// invariance claim) or lies outside Z_p. x = 0 is accepted; its bound is
/// infinite and the partial sum is already exact.
SumCertificate truncated_padic_sum(unsigned k, const BigRat& x, const Prime& p, unsigned long N,
                                   SummationFamily& family = shared_family());

/// Constant-coefficient linear combination sum_j C_j [n^j x^j + U_j(x)],
/// j = 1..k with k = C.size().
struct SeriesSpec {
  std::vector<BigInt> C;
  BigRat x;

  unsigned k() const { return static_cast<unsigned>(C.size()); }
};

struct SeriesPQ {
  BivarPoly P;  // P(n; x)
  IntPoly Q;    // Q(x) = sum_j C_j V_j(x)
};

/// P = sum_j C_j [n^j x^j + U_j(x)] and its p-adic invariant sum
/// Q = sum_j C_j V_j(x). Throws std::invalid_argument for empty C.
SeriesPQ build_P_Q(std::span<const BigInt> C, SummationFamily& family = shared_family());

/// sum_{n=0}^{N-1} n! P(n; x) x^n evaluated directly from P.
BigRat combo_partial_sum(const SeriesPQ& pq, unsigned long N, const BigRat& x);

SumCertificate truncated_combo_sum(const SeriesSpec& spec, const Prime& p, unsigned long N,
                                   SummationFamily& family = shared_family());

}  // namespace padicsum
