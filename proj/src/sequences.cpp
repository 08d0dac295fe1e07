#include "padicsum/sequences.hpp"

#include <stdexcept>

#include "padicsum/kernels.hpp"

namespace padicsum {

void LeftFactorialWalker::advance() {
  left_ += fact_;
  ++n_;
  fact_ *= static_cast<unsigned long>(n_);
}

BigInt left_factorial(std::uint64_t n) {
  LeftFactorialWalker w;
  while (w.n() < n) w.advance();
  return w.left_factorial();
}

KurepaReport kurepa_gcd_scan(std::uint64_t nmax) {
  if (nmax < 2) throw std::invalid_argument("gcd scan needs nmax >= 2");
  KurepaReport r;
  r.gcd_bound = nmax;
  LeftFactorialWalker w;
  while (w.n() < 2) w.advance();
  BigInt g;
  for (; w.n() <= nmax; w.advance()) {
    mpz_gcd(g.get_mpz_t(), w.left_factorial().get_mpz_t(), w.factorial().get_mpz_t());
    if (g != 2) {
      r.first_gcd_failure = w.n();
      break;
    }
    r.gcd_ok_up_to = w.n();
  }
  return r;
}

std::uint64_t kurepa_digit(const Prime& p) { return kernels::kurepa_digit_mod(p.value()); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

KurepaReport kurepa_digit_scan(std::uint64_t pmax) {
  KurepaReport r;
  r.digit_bound = pmax;
  std::vector<std::uint64_t> odd;
  for (auto p : primes_up_to(pmax))
    if (p != 2) odd.push_back(p);
  const auto digits = kernels::kurepa_digits_parallel(odd);
  r.digit_checked_primes = odd.size();
  for (std::size_t i = 0; i < odd.size(); ++i) {
    if (digits[i] == 0) {
      r.first_digit_failure = odd[i];
      break;
    }
  }
  return r;
}

IntegerSequences integer_sequences(unsigned kmax, SummationFamily& family) {
  if (kmax == 0) throw std::invalid_argument("kmax must be positive");
  IntegerSequences s;
  const BigInt one = 1, minus_one = -1;
  for (unsigned k = 1; k <= kmax; ++k) {
    s.neg_v_at_one.push_back(-family.V(k).eval(one));
    s.neg_v_at_minus_one.push_back(-family.V(k).eval(minus_one));
    s.u_at_one.push_back(family.U(k).eval(one));
    s.neg_u_at_minus_one.push_back(-family.U(k).eval(minus_one));
  }
  return s;
}

}  // namespace padicsum
