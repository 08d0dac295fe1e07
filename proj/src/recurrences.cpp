#include "padicsum/recurrences.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace padicsum {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error(what); }

BigInt sign_pow(unsigned e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

// The next A from A_0..A_{k-1} (A.size() == k).
template <class Family>
BivarPoly next_A(const Family& A) {
  const unsigned k = static_cast<unsigned>(A.size());
  BivarPoly r = BivarPoly::monomial(1, k, k) + A[k - 1];
  for (unsigned l = 1; l <= k; ++l) r -= (A[l - 1] * binomial(k + 1, l)).shifted_x(k - l + 1);
  return r;
}

}  // namespace

void check_A(unsigned k, const BivarPoly& a) {
  const std::string tag = "A_" + std::to_string(k);
  if (a.x_degree() != static_cast<long>(k)) fail(tag + ": x-degree is " + std::to_string(a.x_degree()));
  for (unsigned l = 0; l <= k; ++l) {
    const NPoly& layer = a.layer(l);
    if (layer.degree() != static_cast<long>(l) || layer.leading() != 1)
      fail(tag + ": layer " + std::to_string(l) + " is not monic of degree " + std::to_string(l));
  }
  if (a.layer(0) != NPoly::constant(1)) fail(tag + ": A(n;0) != 1");
  if (a.layer(k).eval(BigInt(1)) != sign_pow(k)) fail(tag + ": A_kk(1) != (-1)^k");
}

std::vector<BivarPoly> compute_A_family(unsigned kmax) {
  std::vector<BivarPoly> A;
  A.reserve(kmax + 1);
  A.push_back(BivarPoly::monomial(1, 0, 0));
  for (unsigned k = 1; k <= kmax; ++k) {
    A.push_back(next_A(A));
    check_A(k, A.back());
  }
  return A;
}

IntPoly compute_U(unsigned k, std::span<const BivarPoly> A) {
  if (k == 0 || A.size() < k) throw std::out_of_range("compute_U needs A_{k-1}");
  const BivarPoly& a = A[k - 1];
  return a.eval_n(1).shifted(1) - a.eval_n(0);
}

IntPoly compute_V(unsigned k, std::span<const BivarPoly> A) {
  if (k == 0 || A.size() < k) throw std::out_of_range("compute_V needs A_{k-1}");
  return -A[k - 1].eval_n(0);
}

namespace {

// P_{k+1} = forcing + P_k - sum_{l=1}^{k} C(k+1,l) x^{k-l+1} P_l, with P[i] = P_{i+1}.
std::vector<IntPoly> solve_top_term(unsigned kmax, IntPoly first, bool with_forcing) {
  std::vector<IntPoly> P;
  if (kmax == 0) return P;
  P.reserve(kmax);
  P.push_back(std::move(first));
  for (unsigned k = 1; k < kmax; ++k) {
    IntPoly next = P[k - 1];
    if (with_forcing) next += IntPoly::monomial(1, k + 1);
    for (unsigned l = 1; l <= k; ++l) next -= (P[l - 1] * binomial(k + 1, l)).shifted(k - l + 1);
    P.push_back(std::move(next));
  }
  return P;
}

}  // namespace

std::vector<IntPoly> compute_U_by_recurrence(unsigned kmax) {
  return solve_top_term(kmax, IntPoly(std::vector<BigInt>{-1, 1}), true);
}

std::vector<IntPoly> compute_V_by_recurrence(unsigned kmax) {
  return solve_top_term(kmax, IntPoly::constant(-1), false);
}

BivarPoly recurrence_residual(unsigned k, std::span<const BivarPoly> A) {
  if (k == 0 || A.size() < k + 1) throw std::out_of_range("recurrence_residual needs A_0..A_k");
  BivarPoly r;
  for (unsigned l = 1; l <= k + 1; ++l) r += (A[l - 1] * binomial(k + 1, l)).shifted_x(k - l + 1);
  r -= A[k - 1];
  r -= BivarPoly::monomial(1, k, k);
  return r;
}

void check_triple(const SummationTriple& t) {
  const unsigned k = t.k;
  const std::string tag = "triple k=" + std::to_string(k);
  if (k == 0) fail(tag + ": k must be positive");
  if (t.U.degree() != static_cast<long>(k)) fail(tag + ": deg U != k");
  // V_k has degree k-1 (V_1 = -1, V_2 = 2x - 1, ...).
  if (t.V.degree() != static_cast<long>(k) - 1) fail(tag + ": deg V != k - 1");
  if (t.U.coeff(0) != -1) fail(tag + ": U constant term != -1");
  if (t.V.coeff(0) != -1) fail(tag + ": V constant term != -1");
  if (t.U.leading() != sign_pow(k + 1)) fail(tag + ": U leading coefficient != (-1)^(k+1)");
  if (t.V.leading() != sign_pow(k) * k) fail(tag + ": V leading coefficient != (-1)^k k");
  check_A(k - 1, t.A);
}

void SummationFamily::reserve_to(unsigned kmax) {
  {
    std::shared_lock lock(mu_);
    if (a_.size() > kmax) return;
  }
  std::unique_lock lock(mu_);
  extend_locked(kmax);
}

void SummationFamily::extend_locked(unsigned kmax) {
  if (a_.empty()) a_.push_back(BivarPoly::monomial(1, 0, 0));
  while (a_.size() <= kmax) {
    a_.push_back(next_A(a_));
    check_A(static_cast<unsigned>(a_.size() - 1), a_.back());
  }
  // U_k and V_k need only A_{k-1}.
  while (u_.size() < a_.size()) {
    const BivarPoly& a = a_[u_.size()];
    u_.push_back(a.eval_n(1).shifted(1) - a.eval_n(0));
    v_.push_back(-a.eval_n(0));
  }
}

const BivarPoly& SummationFamily::A(unsigned k) {
  reserve_to(k);
  std::shared_lock lock(mu_);
  return a_[k];
}

const IntPoly& SummationFamily::U(unsigned k) {
  if (k == 0) throw std::out_of_range("U_k is defined for k >= 1");
  reserve_to(k - 1);
  std::shared_lock lock(mu_);
  return u_[k - 1];
}

const IntPoly& SummationFamily::V(unsigned k) {
  if (k == 0) throw std::out_of_range("V_k is defined for k >= 1");
  reserve_to(k - 1);
  std::shared_lock lock(mu_);
  return v_[k - 1];
}

SummationTriple SummationFamily::triple(unsigned k) {
  if (k == 0) throw std::out_of_range("triples are defined for k >= 1");
  SummationTriple t{k, U(k), V(k), A(k - 1)};
  check_triple(t);
  return t;
}

SummationFamily& shared_family() {
  static SummationFamily family;
  return family;
}

SummationTriple build_triple(unsigned k) { return shared_family().triple(k); }

}  // namespace padicsum
