#pragma once

// Data-parallel kernels. Each *_parallel function has a *_serial twin with
// identical results; the serial versions are the reference the tests and the
// benchmark compare against.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padicsum/summation.hpp"

namespace padicsum::kernels {

/// (sum_{j<p} j!) mod p. Checks Wilson's theorem on the running factorial,
/// and that p! vanishes mod p, so every later term j >= p contributes 0.
std::uint64_t kurepa_digit_mod(std::uint64_t p);

std::vector<std::uint64_t> kurepa_digits_serial(std::span<const std::uint64_t> primes);
std::vector<std::uint64_t> kurepa_digits_parallel(std::span<const std::uint64_t> primes);

/// sum_{j=0}^{count-1} P(j)
BigInt level_sum_serial(const IntPoly& P, std::uint64_t count);
BigInt level_sum_parallel(const IntPoly& P, std::uint64_t count);

/// Job grid, iterated in the order k, then N = 1..n_max, then x, then p.
struct VerifyGrid {
  std::vector<unsigned> ks;
  unsigned long n_max = 0;
  std::vector<BigRat> xs;
  std::vector<Prime> primes;
};

std::vector<IdentityCheck> identity_grid_serial(const VerifyGrid& grid, SummationFamily& family);
std::vector<IdentityCheck> identity_grid_parallel(const VerifyGrid& grid, SummationFamily& family);

struct CertificateOutcome {
  unsigned k = 0;
  unsigned long N = 0;
  BigRat x;
  std::uint64_t p = 0;
  std::optional<SumCertificate> certificate;
  std::string rejection;  // set when certificate is empty

  bool ok() const { return certificate && certificate->ok; }
};

std::vector<CertificateOutcome> certificate_grid_serial(const VerifyGrid& grid, SummationFamily& family);
std::vector<CertificateOutcome> certificate_grid_parallel(const VerifyGrid& grid, SummationFamily& family);

}  // namespace padicsum::kernels
