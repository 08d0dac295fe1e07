#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padicsum/sequences.hpp"

using namespace padicsum;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> head(const std::vector<BigInt>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

// Bell numbers from B(k+1) = sum_i C(k, i) B(i).
std::vector<BigInt> bell(unsigned count) {
  std::vector<BigInt> b{1};
  while (b.size() < count) {
    const unsigned k = static_cast<unsigned>(b.size()) - 1;
    BigInt s = 0;
    for (unsigned i = 0; i <= k; ++i) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), k, i);
      s += c * b[i];
    }
    b.push_back(s);
  }
  return b;
}

}  // namespace

TEST_CASE("left_factorial") {
  CHECK(left_factorial(0) == 0);
  CHECK(left_factorial(1) == 1);
  CHECK(left_factorial(2) == 2);
  CHECK(left_factorial(4) == 10);
  CHECK(left_factorial(10) == 409114);
  LeftFactorialWalker w;
  for (int i = 0; i < 7; ++i) w.advance();
  CHECK(w.n() == 7);
  CHECK(w.left_factorial() == left_factorial(7));
  CHECK(w.factorial() == 5040);
}

TEST_CASE("gcd(!n, n!) for small n") {
  for (unsigned long n = 2; n <= 4; ++n) {
    BigInt f, g;
    mpz_fac_ui(f.get_mpz_t(), n);
    mpz_gcd(g.get_mpz_t(), left_factorial(n).get_mpz_t(), f.get_mpz_t());
    CHECK(g == 2);
  }
  const auto r = kurepa_gcd_scan(300);
  CHECK(r.holds());
  CHECK(r.gcd_ok_up_to == 300);
  CHECK(r.gcd_bound == 300);
  CHECK_FALSE(r.first_gcd_failure.has_value());
  CHECK_THROWS_AS(kurepa_gcd_scan(1), std::invalid_argument);
}

TEST_CASE("gcd(!n, n!) is always even") {
  LeftFactorialWalker w;
  BigInt g;
  for (w.advance(), w.advance(); w.n() <= 200; w.advance()) {
    mpz_gcd(g.get_mpz_t(), w.left_factorial().get_mpz_t(), w.factorial().get_mpz_t());
    REQUIRE(g % 2 == 0);
  }
}

TEST_CASE("kurepa_digit") {
  CHECK(kurepa_digit(Prime(2)) == 0);
  CHECK(kurepa_digit(Prime(3)) == 1);
  CHECK(kurepa_digit(Prime(5)) == 4);
}

TEST_CASE("kurepa_digit is the residue of the full sum") {
  for (auto p : primes_up_to(400)) {
    BigInt s = 0, f = 1;
    for (std::uint64_t j = 0; j < p + 10; ++j) {
      if (j > 0) f *= static_cast<unsigned long>(j);
      s += f;
    }
    BigInt r = s % static_cast<unsigned long>(p);
    REQUIRE(r == static_cast<unsigned long>(kurepa_digit(Prime(p))));
  }
}

TEST_CASE("kurepa_digit_scan") {
  const auto r = kurepa_digit_scan(1000);
  CHECK(r.holds());
  CHECK(r.digit_checked_primes == primes_up_to(1000).size() - 1);
  CHECK(kurepa_digit_scan(2).digit_checked_primes == 0);
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  for (auto p : primes_up_to(5000)) REQUIRE(is_prime(p));
  CHECK(primes_up_to(10000).size() == 1229);
}

TEST_CASE("the four published sequences") {
  const auto s = integer_sequences(6);
  CHECK(s.neg_v_at_one == ints({1, -1, -1, 5, -5, -21}));
  CHECK(s.neg_v_at_minus_one == ints({1, 3, 9, 31, 121, 523}));
  CHECK(s.u_at_one == ints({0, 1, -1, -2, 9, -9}));
  CHECK(head(s.neg_u_at_minus_one, 5) == ints({2, 5, 15, 52, 203}));
  CHECK_THROWS(integer_sequences(0));
}

TEST_CASE("-U_k(-1) are Bell numbers B(k+1)") {
  const auto s = integer_sequences(15);
  const auto b = bell(17);
  for (unsigned k = 1; k <= 15; ++k) REQUIRE(s.neg_u_at_minus_one[k - 1] == b[k + 1]);
}

TEST_CASE("sequences agree with the standalone U/V recurrences") {
  const auto s = integer_sequences(20);
  const auto U = compute_U_by_recurrence(20);
  const auto V = compute_V_by_recurrence(20);
  for (unsigned k = 1; k <= 20; ++k) {
    REQUIRE(s.neg_v_at_one[k - 1] == -V[k - 1].eval(BigInt(1)));
    REQUIRE(s.neg_v_at_minus_one[k - 1] == -V[k - 1].eval(BigInt(-1)));
    REQUIRE(s.u_at_one[k - 1] == U[k - 1].eval(BigInt(1)));
    REQUIRE(s.neg_u_at_minus_one[k - 1] == -U[k - 1].eval(BigInt(-1)));
  }
}
