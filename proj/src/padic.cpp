#include "padicsum/padic.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace padicsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

long ValExponent::value() const {
  if (!v_) throw std::logic_error("valuation is infinite");
  return *v_;
}

std::string ValExponent::to_string() const { return v_ ? std::to_string(*v_) : "inf"; }

std::strong_ordering operator<=>(const ValExponent& a, const ValExponent& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.v_ <=> *b.v_;
}

ValExponent operator+(const ValExponent& a, const ValExponent& b) {
  if (a.is_infinite() || b.is_infinite()) return ValExponent::infinite();
  return ValExponent::finite(*a.v_ + *b.v_);
}

std::uint64_t digit_sum(std::uint64_t n, const Prime& p) {
  std::uint64_t s = 0;
  for (; n > 0; n /= p.value()) s += n % p.value();
  return s;
}

std::uint64_t legendre_valuation(std::uint64_t n, const Prime& p) {
  std::uint64_t m = 0;
  for (std::uint64_t q = n / p.value(); q > 0; q /= p.value()) m += q;
  return m;
}

std::uint64_t factorial_norm_exponent(std::uint64_t n, const Prime& p) {
  const std::uint64_t s = digit_sum(n, p);
  const std::uint64_t num = n - s;
  if (s > n || num % (p.value() - 1) != 0) {
    std::fprintf(stderr, "factorial_norm_exponent: (n - s_n) not divisible by p - 1 (n=%llu, p=%llu)\n",
                 static_cast<unsigned long long>(n), static_cast<unsigned long long>(p.value()));
    std::abort();
  }
  return num / (p.value() - 1);
}

ValExponent vp(const BigInt& a, const Prime& p) {
  if (a == 0) return ValExponent::infinite();
  BigInt rest;
  BigInt prime(static_cast<unsigned long>(p.value()));
  auto removed = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t());
  return ValExponent::finite(static_cast<long>(removed));
}

ValExponent vp(const BigRat& q, const Prime& p) {
  if (q == 0) return ValExponent::infinite();
  BigRat c(q);
  c.canonicalize();
  return ValExponent::finite(vp(c.get_num(), p).value() - vp(c.get_den(), p).value());
}

bool in_convergence_domain(const BigRat& x, const Prime& p) {
  return vp(x, p) >= ValExponent::finite(0);
}

ValExponent padic_distance_exponent(const BigRat& a, const BigRat& b, const Prime& p) {
  return vp(BigRat(a - b), p);
}

bool PadicExpansion::is_zero() const {
  for (auto d : digits)
    if (d != 0) return false;
  return true;
}

BigRat PadicExpansion::reconstruct() const {
  const BigInt prime(static_cast<unsigned long>(p.value()));
  BigInt significand = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    significand = significand * prime + BigInt(static_cast<unsigned long>(*it));
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(valuation < 0 ? -valuation : valuation));
  BigRat r = valuation < 0 ? BigRat(significand, scale) : BigRat(significand * scale);
  r.canonicalize();
  return r;
}

PadicExpansion padic_expand(const BigRat& q, const Prime& p, long precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  PadicExpansion e{p, 0, std::vector<std::uint64_t>(static_cast<std::size_t>(precision), 0), precision};
  if (q == 0) return e;

  const BigInt prime(static_cast<unsigned long>(p.value()));
  const long v = vp(q, p).value();
  e.valuation = v;

  // Unit part u = q / p^v has numerator and denominator prime to p.
  BigInt num = q.get_num(), den = q.get_den();
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
  if (v > 0) num /= scale;
  if (v < 0) den /= scale;

  BigInt modulus;
  mpz_pow_ui(modulus.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(precision));
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::logic_error("unit denominator not invertible modulo p^precision");
  BigInt residue = num * inv;
  mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());

  for (auto& d : e.digits) {
    BigInt r;
    mpz_fdiv_qr(residue.get_mpz_t(), r.get_mpz_t(), residue.get_mpz_t(), prime.get_mpz_t());
    d = r.get_ui();
  }
  return e;
}

}  // namespace padicsum
