#include "padicsum/summation.hpp"

namespace padicsum {

namespace {

BigRat rat_pow(const BigRat& x, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ValExponent bound_for(unsigned long N, const BigRat& x, const Prime& p) {
  const ValExponent vx = vp(x, p);
  if (vx.is_infinite()) return vx;
  return ValExponent::finite(static_cast<long>(factorial_norm_exponent(N, p)) + static_cast<long>(N) * vx.value());
}

void require_certifiable(const BigRat& x, const Prime& p) {
  if (!is_integer(x))
    throw DomainError("x = " + to_string(x) + " is not an integer; p-adic invariant sums need x in Z");
  if (!in_convergence_domain(x, p))
    throw DomainError("x = " + to_string(x) + " is outside Z_" + std::to_string(p.value()));
}

}  // namespace

BigRat partial_sum_Sk(unsigned k, unsigned long N, const BigRat& x) {
  BigRat sum = 0;
  BigInt fact = 1;
  BigRat xpow = 1;
  BigInt nk;
  for (unsigned long n = 0; n < N; ++n) {
    if (n > 0) {
      fact *= n;
      xpow *= x;
    }
    mpz_ui_pow_ui(nk.get_mpz_t(), n, k);  // 0^0 = 1
    sum += BigRat(fact * nk) * xpow;
  }
  return sum;
}

BigRat identity_lhs(unsigned k, unsigned long N, const BigRat& x, SummationFamily& family) {
  const BigRat u = family.U(k).eval(x);
  const BigRat xk = rat_pow(x, k);
  BigRat sum = 0;
  BigInt fact = 1;
  BigRat xpow = 1;
  BigInt nk;
  for (unsigned long n = 0; n < N; ++n) {
    if (n > 0) {
      fact *= n;
      xpow *= x;
    }
    mpz_ui_pow_ui(nk.get_mpz_t(), n, k);
    sum += BigRat(fact) * (BigRat(nk) * xk + u) * xpow;
  }
  return sum;
}

BigRat identity_rhs(unsigned k, unsigned long N, const BigRat& x, SummationFamily& family) {
  const BigRat a = family.A(k - 1).eval(BigInt(N), x);
  return family.V(k).eval(x) + BigRat(factorial(N)) * rat_pow(x, N) * a;
}

IdentityCheck verify_identity(unsigned k, unsigned long N, const BigRat& x, SummationFamily& family) {
  IdentityCheck c{k, N, x, identity_lhs(k, N, x, family), identity_rhs(k, N, x, family), false};
  c.ok = c.lhs == c.rhs;
  return c;
}

BigRat invariant_sum(unsigned k, const BigInt& x, SummationFamily& family) {
  return BigRat(family.V(k).eval(x));
}

SumCertificate truncated_padic_sum(unsigned k, const BigRat& x, const Prime& p, unsigned long N,
                                   SummationFamily& family) {
  require_certifiable(x, p);
  SumCertificate c{"power", k, N, x, p, 0, 0, 0};
  c.partial = identity_lhs(k, N, x, family);
  c.target = family.V(k).eval(x);
  c.tail = -BigRat(factorial(N)) * rat_pow(x, N) * family.A(k - 1).eval(BigInt(N), x);
  c.distance_exponent = padic_distance_exponent(c.partial, c.target, p);
  c.bound_exponent = bound_for(N, x, p);
  c.ok = (c.partial + c.tail == c.target) && c.distance_exponent >= c.bound_exponent;
  return c;
}

SeriesPQ build_P_Q(std::span<const BigInt> C, SummationFamily& family) {
  if (C.empty()) throw std::invalid_argument("a series needs at least one coefficient C_1");
  SeriesPQ pq;
  for (unsigned j = 1; j <= C.size(); ++j) {
    const BigInt& c = C[j - 1];
    pq.P += (BivarPoly::monomial(1, j, j) + BivarPoly::from_x(family.U(j))) * c;
    pq.Q += family.V(j) * c;
  }
  return pq;
}

BigRat combo_partial_sum(const SeriesPQ& pq, unsigned long N, const BigRat& x) {
  BigRat sum = 0;
  BigInt fact = 1;
  BigRat xpow = 1;
  for (unsigned long n = 0; n < N; ++n) {
    if (n > 0) {
      fact *= n;
      xpow *= x;
    }
    sum += BigRat(fact) * pq.P.eval(BigInt(n), x) * xpow;
  }
  return sum;
}

SumCertificate truncated_combo_sum(const SeriesSpec& spec, const Prime& p, unsigned long N,
                                   SummationFamily& family) {
  require_certifiable(spec.x, p);
  const SeriesPQ pq = build_P_Q(spec.C, family);
  SumCertificate c{"combo", spec.k(), N, spec.x, p, 0, 0, 0};
  c.partial = combo_partial_sum(pq, N, spec.x);
  c.target = pq.Q.eval(spec.x);
  BigRat weighted_tail = 0;
  for (unsigned j = 1; j <= spec.k(); ++j)
    weighted_tail += BigRat(spec.C[j - 1]) * family.A(j - 1).eval(BigInt(N), spec.x);
  c.tail = -BigRat(factorial(N)) * rat_pow(spec.x, N) * weighted_tail;
  c.distance_exponent = padic_distance_exponent(c.partial, c.target, p);
  c.bound_exponent = bound_for(N, spec.x, p);
  c.ok = (c.partial + c.tail == c.target) && c.distance_exponent >= c.bound_exponent;
  return c;
}

}  // namespace padicsum
