#include "padicsum/kernels.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace padicsum::kernels {

std::uint64_t kurepa_digit_mod(std::uint64_t p) {
  using u128 = unsigned __int128;
  std::uint64_t sum = 0, fact = 1;
  for (std::uint64_t j = 0; j < p; ++j) {
    if (j > 0) fact = static_cast<std::uint64_t>(static_cast<u128>(fact) * j % p);
    sum = (sum + fact) % p;
  }
  if (p > 1 && fact != p - 1) throw std::logic_error("Wilson check failed: (p-1)! != -1 mod p");
  if (static_cast<u128>(fact) * p % p != 0) throw std::logic_error("p! does not vanish mod p");
  return sum;
}

std::vector<std::uint64_t> kurepa_digits_serial(std::span<const std::uint64_t> primes) {
  std::vector<std::uint64_t> out(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) out[i] = kurepa_digit_mod(primes[i]);
  return out;
}

namespace {

// Runs body(i) for i in [0, n) across threads; the first exception thrown
// by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(padicsum_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::uint64_t> kurepa_digits_parallel(std::span<const std::uint64_t> primes) {
  std::vector<std::uint64_t> out(primes.size());
  // Cost grows with p, so hand out large primes first.
  parallel_for(primes.size(), [&](std::size_t i) {
    const std::size_t idx = primes.size() - 1 - i;
    out[idx] = kurepa_digit_mod(primes[idx]);
  });
  return out;
}

BigInt level_sum_serial(const IntPoly& P, std::uint64_t count) {
  BigInt sum = 0;
  for (std::uint64_t j = 0; j < count; ++j) sum += P.eval(BigInt(static_cast<unsigned long>(j)));
  return sum;
}

BigInt level_sum_parallel(const IntPoly& P, std::uint64_t count) {
  const int threads = std::max(1, omp_get_max_threads());
  std::vector<BigInt> partial(static_cast<std::size_t>(threads), BigInt(0));
  const auto n = static_cast<long long>(count);
#pragma omp parallel num_threads(threads)
  {
    BigInt& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    BigInt at;
#pragma omp for schedule(static)
    for (long long j = 0; j < n; ++j) {
      at = static_cast<unsigned long>(j);
      mine += P.eval(at);
    }
  }
  BigInt sum = 0;
  for (const auto& s : partial) sum += s;
  return sum;
}

namespace {

unsigned max_k(const VerifyGrid& grid) {
  return grid.ks.empty() ? 1u : *std::max_element(grid.ks.begin(), grid.ks.end());
}

// Flattened index -> (k index, N, x index).
struct IdentityIndex {
  std::size_t ki;
  unsigned long N;
  std::size_t xi;
};

IdentityIndex identity_index(const VerifyGrid& g, std::size_t i) {
  const std::size_t nx = g.xs.size();
  const std::size_t per_k = g.n_max * nx;
  return {i / per_k, static_cast<unsigned long>((i % per_k) / nx) + 1, i % nx};
}

std::size_t identity_count(const VerifyGrid& g) { return g.ks.size() * g.n_max * g.xs.size(); }

CertificateOutcome certify(const VerifyGrid& g, std::size_t i, SummationFamily& family) {
  const std::size_t np = g.primes.size();
  const IdentityIndex at = identity_index(g, i / np);
  const Prime& p = g.primes[i % np];
  CertificateOutcome out{g.ks[at.ki], at.N, g.xs[at.xi], p.value(), std::nullopt, {}};
  try {
    out.certificate = truncated_padic_sum(out.k, out.x, p, out.N, family);
  } catch (const DomainError& e) {
    out.rejection = e.what();
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> identity_grid_serial(const VerifyGrid& grid, SummationFamily& family) {
  std::vector<IdentityCheck> out;
  out.reserve(identity_count(grid));
  for (std::size_t i = 0; i < identity_count(grid); ++i) {
    const auto at = identity_index(grid, i);
    out.push_back(verify_identity(grid.ks[at.ki], at.N, grid.xs[at.xi], family));
  }
  return out;
}

std::vector<IdentityCheck> identity_grid_parallel(const VerifyGrid& grid, SummationFamily& family) {
  family.reserve_to(max_k(grid));
  std::vector<IdentityCheck> out(identity_count(grid));
  parallel_for(out.size(), [&](std::size_t i) {
    const auto at = identity_index(grid, i);
    out[i] = verify_identity(grid.ks[at.ki], at.N, grid.xs[at.xi], family);
  });
  return out;
}

std::vector<CertificateOutcome> certificate_grid_serial(const VerifyGrid& grid, SummationFamily& family) {
  const std::size_t n = identity_count(grid) * grid.primes.size();
  std::vector<CertificateOutcome> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(certify(grid, i, family));
  return out;
}

std::vector<CertificateOutcome> certificate_grid_parallel(const VerifyGrid& grid, SummationFamily& family) {
  family.reserve_to(max_k(grid));
  std::vector<CertificateOutcome> out(identity_count(grid) * grid.primes.size());
  parallel_for(out.size(), [&](std::size_t i) { out[i] = certify(grid, i, family); });
  return out;
}

}  // namespace padicsum::kernels
