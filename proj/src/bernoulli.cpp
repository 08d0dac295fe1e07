#include "padicsum/bernoulli.hpp"

#include <string>

#include "padicsum/kernels.hpp"

namespace padicsum {

BernoulliTable bernoulli_numbers(unsigned nmax) {
  std::vector<BigRat> B;
  B.reserve(nmax + 1);
  B.emplace_back(1);
  // Row n of the recurrence determines B_{n-1}: C(n, n-1) B_{n-1} = -sum_{j<n-1} C(n,j) B_j.
  for (unsigned n = 2; n <= nmax + 1; ++n) {
    BigRat s = 0;
    for (unsigned j = 0; j + 1 < n; ++j) s += BigRat(binomial(n, j)) * B[j];
    BigRat b = -s / BigRat(n);
    b.canonicalize();
    B.push_back(std::move(b));
  }
  return BernoulliTable(std::move(B));
}

BigRat volkenborn_poly(const IntPoly& P, const BernoulliTable& table) {
  const auto c = P.coeffs();
  if (!c.empty() && !table.covers(c.size() - 1))
    throw std::out_of_range("Bernoulli table too short for degree " + std::to_string(P.degree()));
  BigRat s = 0;
  for (std::size_t l = 0; l < c.size(); ++l) s += BigRat(c[l]) * table[l];
  return s;
}

BigRat volkenborn_level(const IntPoly& P, const Prime& p, unsigned m, std::uint64_t work_limit) {
  if (m == 0) throw std::invalid_argument("Volkenborn level must be at least 1");
  BigInt count;
  mpz_ui_pow_ui(count.get_mpz_t(), p.value(), m);
  if (count > BigInt(static_cast<unsigned long>(work_limit)))
    throw WorkLimitExceeded("p^m = " + count.get_str() + " exceeds the work limit " + std::to_string(work_limit));
  BigRat r(kernels::level_sum_parallel(P, count.get_ui()), count);
  r.canonicalize();
  return r;
}

IdentitySides bernoulli_identity_partial(unsigned k, unsigned long N, const BernoulliTable& table,
                                         SummationFamily& family) {
  if (k == 0 || N == 0) throw std::invalid_argument("k and N must be positive");
  if (!table.covers(N + k - 1))
    throw std::out_of_range("Bernoulli table must reach B_" + std::to_string(N + k - 1));
  const IntPoly& U = family.U(k);
  const IntPoly& V = family.V(k);
  const BivarPoly& A = family.A(k - 1);

  IdentitySides s{0, 0};
  BigInt fact = 1;
  BigInt nk;
  for (unsigned long n = 0; n < N; ++n) {
    if (n > 0) fact *= n;
    mpz_ui_pow_ui(nk.get_mpz_t(), n, k);
    BigRat term = BigRat(nk) * table[n + k];
    for (std::size_t l = 0; l < U.coeffs().size(); ++l) term += BigRat(U.coeffs()[l]) * table[n + l];
    s.lhs += BigRat(fact) * term;
  }
  fact *= N;

  s.rhs = volkenborn_poly(V, table);
  const IntPoly a_at_N = A.eval_n(BigInt(N));
  BigRat tail = 0;
  for (std::size_t l = 0; l < a_at_N.coeffs().size(); ++l) tail += BigRat(a_at_N.coeffs()[l]) * table[N + l];
  s.rhs += BigRat(fact) * tail;
  return s;
}

SumCertificate bernoulli_series_certificate(unsigned k, const Prime& p, unsigned long N, const BernoulliTable& table,
                                            SummationFamily& family) {
  const IdentitySides sides = bernoulli_identity_partial(k, N, table, family);
  SumCertificate c{"bernoulli", k, N, std::nullopt, p, 0, 0, 0};
  c.partial = sides.lhs;
  c.target = volkenborn_poly(family.V(k), table);
  // The N!-weighted Bernoulli tail, moved to the other side.
  c.tail = c.target - sides.rhs;
  c.distance_exponent = padic_distance_exponent(c.partial, c.target, p);
  c.bound_exponent = ValExponent::finite(static_cast<long>(factorial_norm_exponent(N, p)) - 1);
  c.ok = (c.partial + c.tail == c.target) && c.distance_exponent >= c.bound_exponent;
  return c;
}

}  // namespace padicsum
