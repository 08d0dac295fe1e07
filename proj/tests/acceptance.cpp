// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "padicsum/bernoulli.hpp"
#include "padicsum/cli.hpp"
#include "padicsum/kernels.hpp"
#include "padicsum/sequences.hpp"
#include "padicsum/summation.hpp"
#include "published_tables.hpp"
#include "test_util.hpp"

using namespace padicsum;
using namespace padicsum::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

// Runs one criterion; a runtime limit of 0 means untimed.
void criterion(const char* id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds)
    o.require(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
  if (!o.ok) ++failures;
  std::printf("[%s] %-4s %-58s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : "  -- ",
              o.detail.c_str());
  std::fflush(stdout);
}

BigInt sign_pow(unsigned e) { return e % 2 ? BigInt(-1) : BigInt(1); }

const std::vector<Prime>& small_primes() {
  static const std::vector<Prime> p = {Prime(2), Prime(3), Prime(5), Prime(7), Prime(11)};
  return p;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "padicsum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
  criterion("AC1", "table reproduction k = 1..6 (18 comparisons)", 1.0, [](Outcome& o) {
    SummationFamily family;
    int compared = 0;
    for (unsigned k = 1; k <= 6; ++k) {
      const auto& t = published_triples()[k - 1];
      const auto triple = family.triple(k);
      o.require(triple.U == published_x(t.U), "U_" + std::to_string(k));
      o.require(triple.V == published_x(t.V), "V_" + std::to_string(k));
      o.require(triple.A == published_bivar(t.A), "A_" + std::to_string(k - 1));
      compared += 3;
    }
    o.require(compared == 18, "comparison count");
  });

  criterion("AC2", "U/V closed form == U/V recurrences, k <= 25", 10.0, [](Outcome& o) {
    const auto A = compute_A_family(24);
    const auto U = compute_U_by_recurrence(25);
    const auto V = compute_V_by_recurrence(25);
    for (unsigned k = 1; k <= 25; ++k) {
      o.require(U[k - 1] == compute_U(k, A), "U_" + std::to_string(k));
      o.require(V[k - 1] == compute_V(k, A), "V_" + std::to_string(k));
    }
  });

  criterion("AC3", "A-family back-substitution, zero remainder, k <= 25", 0, [](Outcome& o) {
    const auto A = compute_A_family(26);
    for (unsigned k = 1; k <= 25; ++k)
      o.require(recurrence_residual(k, A).is_zero(), "residual k=" + std::to_string(k));
  });

  criterion("AC4", "identity fuzz k 1..10 x N 1..25 x (x in -5..5 + 200 rationals)", 30.0, [](Outcome& o) {
    SummationFamily family;
    kernels::VerifyGrid grid;
    for (unsigned k = 1; k <= 10; ++k) grid.ks.push_back(k);
    grid.n_max = 25;
    for (long x = -5; x <= 5; ++x) grid.xs.emplace_back(x);
    std::mt19937_64 gen(20260101);
    std::uniform_int_distribution<long> num(-12, 12), den(2, 12);
    while (grid.xs.size() < 11 + 200) {
      BigRat q(num(gen), den(gen));
      q.canonicalize();
      if (!is_integer(q)) grid.xs.push_back(q);
    }
    const auto checks = kernels::identity_grid_parallel(grid, family);
    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.ok ? 0 : 1;
    o.require(checks.size() == 10u * 25u * 211u, "grid size");
    o.require(failed == 0, std::to_string(failed) + " identity failures");
  });

  criterion("AC5", "structural properties, k <= 25", 0, [](Outcome& o) {
    SummationFamily family;
    for (unsigned k = 0; k <= 25; ++k) {
      const BivarPoly& A = family.A(k);
      o.require(A.eval_n(0).coeff(0) == 1 && A.layer(0) == NPoly::constant(1), "A_k(n;0) = 1, k=" + std::to_string(k));
      o.require(A.layer(k).eval(BigInt(1)) == sign_pow(k), "A_kk(1), k=" + std::to_string(k));
    }
    for (unsigned k = 1; k <= 25; ++k) {
      const IntPoly& U = family.U(k);
      const IntPoly& V = family.V(k);
      o.require(U.coeff(0) == -1 && V.coeff(0) == -1, "U_k0 = V_k0 = -1, k=" + std::to_string(k));
      o.require(U.degree() == static_cast<long>(k) && U.leading() == sign_pow(k + 1), "U_kk, k=" + std::to_string(k));
      o.require(V.leading() == sign_pow(k) * k, "V_kk, k=" + std::to_string(k));
    }
  });

  criterion("AC6", "p-adic certificates k<=5, p in {2,3,5,7}, x in -3..3\\0, N<=50", 0, [](Outcome& o) {
    SummationFamily family;
    kernels::VerifyGrid grid;
    grid.ks = {1, 2, 3, 4, 5};
    grid.n_max = 50;
    for (long x = -3; x <= 3; ++x)
      if (x != 0) grid.xs.emplace_back(x);
    grid.primes = {Prime(2), Prime(3), Prime(5), Prime(7)};
    const auto outcomes = kernels::certificate_grid_parallel(grid, family);
    o.require(outcomes.size() == 5u * 50u * 6u * 4u, "grid size");
    std::map<std::pair<unsigned, long>, BigRat> targets;
    for (const auto& r : outcomes) {
      if (!r.certificate) {
        o.require(false, "rejected: " + r.rejection);
        continue;
      }
      const auto& c = *r.certificate;
      const long bound = static_cast<long>(factorial_norm_exponent(r.N, c.p)) +
                         static_cast<long>(r.N) * vp(r.x, c.p).value();
      o.require(c.distance_exponent >= ValExponent::finite(bound) && c.partial + c.tail == c.target,
                "certificate k=" + std::to_string(r.k) + " N=" + std::to_string(r.N) + " x=" + to_string(r.x) +
                    " p=" + std::to_string(r.p));
      const auto key = std::make_pair(r.k, r.x.get_num().get_si());
      auto [it, fresh] = targets.emplace(key, c.target);
      o.require(fresh || it->second == c.target, "target depends on p");
    }
  });

  criterion("AC7", "published example sums (six power series, three Bernoulli)", 0, [](Outcome& o) {
    SummationFamily family;
    // The published series sum_n n! c(n) x^n = value; sign relates it to V_k(x).
    struct Example {
      unsigned k;
      long x;
      std::function<BigInt(long)> c;
      long value;
      int sign;
    };
    const std::vector<Example> examples = {
        {1, 1, [](long n) { return BigInt(n); }, -1, 1},
        {1, -1, [](long n) { return BigInt(n + 2); }, 1, -1},
        {2, 1, [](long n) { return BigInt(n * n + 1); }, 1, 1},
        {2, -1, [](long n) { return BigInt(n * n - 5); }, -3, 1},
        {3, 1, [](long n) { return BigInt(n * n * n - 1); }, 1, 1},
        {3, -1, [](long n) { return BigInt(n * n * n + 15); }, 9, -1},
    };
    for (const auto& e : examples) {
      const std::string tag = "k=" + std::to_string(e.k) + " x=" + std::to_string(e.x);
      o.require(invariant_sum(e.k, e.x, family) == BigRat(e.sign * e.value), "V_k(x) vs published value, " + tag);
      // The published summand is sign * P_k(n; x).
      BivarPoly P = BivarPoly::monomial(1, e.k, e.k);
      P += BivarPoly::from_x(family.U(e.k));
      for (long n = 0; n < 20; ++n)
        o.require(BigRat(e.c(n)) == BigRat(e.sign) * P.eval(BigInt(n), BigRat(e.x)), "summand mismatch, " + tag);
      // Direct truncation of the published series lands within |N!|_p of the value.
      const unsigned long N = 50;
      BigInt partial = 0, f = 1;
      for (unsigned long n = 0; n < N; ++n) {
        if (n > 0) f *= n;
        partial += f * e.c(static_cast<long>(n)) * ((e.x < 0 && n % 2) ? -1 : 1);
      }
      for (const Prime& p : small_primes())
        o.require(padic_distance_exponent(BigRat(partial), BigRat(e.value), p) >=
                      ValExponent::finite(static_cast<long>(factorial_norm_exponent(N, p))),
                  "truncation distance, " + tag);
    }
    const auto B = bernoulli_numbers(80);
    const long bernoulli_targets[] = {-1, -2, -4};
    for (unsigned k = 1; k <= 3; ++k) {
      o.require(volkenborn_poly(family.V(k), B) == bernoulli_targets[k - 1], "Bernoulli target k=" + std::to_string(k));
      for (const Prime& p : small_primes())
        o.require(bernoulli_series_certificate(k, p, 60, B, family).ok, "Bernoulli certificate k=" + std::to_string(k));
    }
  });

  criterion("AC8", "Bernoulli table, |B_n|_p <= p, identity images, level sums", 0, [](Outcome& o) {
    SummationFamily family;
    const auto B = bernoulli_numbers(60);
    for (unsigned n = 2; n <= 61; ++n) {
      BigRat s = 0;
      for (unsigned j = 0; j < n; ++j) s += BigRat(binomial(n, j)) * B[j];
      o.require(s == 0, "recurrence row " + std::to_string(n));
    }
    o.require(B[0] == 1 && B[1] == BigRat(-1, 2), "B_0, B_1");
    for (unsigned n = 3; n <= 60; n += 2) o.require(B[n] == 0, "odd B_" + std::to_string(n));
    for (unsigned n = 0; n <= 60; ++n)
      for (const Prime& p : small_primes())
        o.require(vp(B[n], p) >= ValExponent::finite(-1), "v_p(B_" + std::to_string(n) + ")");
    for (unsigned k = 1; k <= 6; ++k)
      for (unsigned long N = 1; N <= 20; ++N) {
        const auto s = bernoulli_identity_partial(k, N, B, family);
        o.require(s.lhs == s.rhs, "identity image k=" + std::to_string(k) + " N=" + std::to_string(N));
      }
    for (const Prime& p : {Prime(3), Prime(5), Prime(7)})
      for (unsigned n = 0; n <= 6; ++n)
        for (unsigned m = 1; m <= 5; ++m) {
          const auto d = padic_distance_exponent(volkenborn_level(IntPoly::monomial(1, n), p, m), B[n], p);
          const long bound = static_cast<long>(m) - vp(BigInt(n + 1), p).value() - 1;
          o.require(d >= ValExponent::finite(bound), "level p=" + std::to_string(p.value()) + " n=" +
                                                         std::to_string(n) + " m=" + std::to_string(m));
        }
  });

  criterion("AC9", "four published sequences + Bell recurrence to k = 15", 0, [](Outcome& o) {
    SummationFamily family;
    const auto s = integer_sequences(15, family);
    auto first = [](const std::vector<BigInt>& v, std::size_t n) { return std::vector<BigInt>(v.begin(), v.begin() + n); };
    auto ints = [](std::initializer_list<long> l) { return std::vector<BigInt>(l.begin(), l.end()); };
    o.require(first(s.neg_v_at_one, 6) == ints({1, -1, -1, 5, -5, -21}), "-V_k(1)");
    o.require(first(s.neg_v_at_minus_one, 6) == ints({1, 3, 9, 31, 121, 523}), "-V_k(-1)");
    o.require(first(s.u_at_one, 6) == ints({0, 1, -1, -2, 9, -9}), "U_k(1)");
    o.require(first(s.neg_u_at_minus_one, 5) == ints({2, 5, 15, 52, 203}), "-U_k(-1)");
    std::vector<BigInt> bell{1};
    for (unsigned k = 0; bell.size() < 17; ++k) {
      BigInt next = 0;
      for (unsigned i = 0; i <= k; ++i) next += binomial(k, i) * bell[i];
      bell.push_back(next);
    }
    for (unsigned k = 1; k <= 15; ++k) o.require(s.neg_u_at_minus_one[k - 1] == bell[k + 1], "Bell k=" + std::to_string(k));
  });

  criterion("AC10", "Kurepa: gcd(!n,n!)=2 n<=2000, digit != 0 odd p<=10000", 60.0, [](Outcome& o) {
    const auto g = kurepa_gcd_scan(2000);
    o.require(!g.first_gcd_failure && g.gcd_ok_up_to == 2000, "gcd scan");
    const auto d = kurepa_digit_scan(10000);
    o.require(!d.first_digit_failure && d.digit_checked_primes == 1228, "digit scan");
    o.require(run_cli({"kurepa", "--gcd-max", "2000", "--digit-max", "10000"}) == cli::kExitOk, "CLI exit code");
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
