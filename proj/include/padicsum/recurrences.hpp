#pragma once

#include <deque>
#include <shared_mutex>
#include <span>
#include <vector>

#include "padicsum/poly.hpp"

namespace padicsum {

/// A_0 .. A_kmax. A_0 = 1 and for k >= 1
///   A_k(n;x) = n^k x^k + A_{k-1}(n;x) - sum_{l=1}^{k} C(k+1,l) x^{k-l+1} A_{l-1}(n;x).
std::vector<BivarPoly> compute_A_family(unsigned kmax);

/// U_k(x) = x*A_{k-1}(1;x) - A_{k-1}(0;x). Requires A.size() >= k.
IntPoly compute_U(unsigned k, std::span<const BivarPoly> A);
/// V_k(x) = -A_{k-1}(0;x). Requires A.size() >= k.
IntPoly compute_V(unsigned k, std::span<const BivarPoly> A);

/// U_1 .. U_kmax from the standalone U-recurrence seeded with U_1 = x - 1;
/// element k-1 holds U_k. Shares no code path with compute_U.
std::vector<IntPoly> compute_U_by_recurrence(unsigned kmax);
/// V_1 .. V_kmax from the V-recurrence seeded with V_1 = -1; element k-1 holds V_k.
std::vector<IntPoly> compute_V_by_recurrence(unsigned kmax);

/// Left side of the defining A-relation for index k >= 1:
///   sum_{l=1}^{k+1} C(k+1,l) x^{k-l+1} A_{l-1} - A_{k-1} - n^k x^k.
/// Zero for a correct family. Requires A.size() >= k + 1.
BivarPoly recurrence_residual(unsigned k, std::span<const BivarPoly> A);

struct SummationTriple {
  unsigned k = 0;
  IntPoly U;  // degree k
  IntPoly V;  // degree k - 1
  BivarPoly A;  // A_{k-1}
};

/// Throws std::logic_error naming the first violated structural property.
void check_triple(const SummationTriple& t);
/// Degree and normalisation of a single A_k. Throws std::logic_error.
void check_A(unsigned k, const BivarPoly& a);

/// Incrementally built and cached A/U/V family. Extending is serialised;
/// readers take a shared lock and receive references that stay valid for
/// the lifetime of the family.
class SummationFamily {
 public:
  SummationFamily() = default;
  explicit SummationFamily(unsigned kmax) { reserve_to(kmax); }
  SummationFamily(const SummationFamily&) = delete;
  SummationFamily& operator=(const SummationFamily&) = delete;

  /// Ensures A_0..A_kmax and U_1..U_{kmax+1}, V_1..V_{kmax+1} exist.
  void reserve_to(unsigned kmax);

  const BivarPoly& A(unsigned k);
  const IntPoly& U(unsigned k);  // k >= 1
  const IntPoly& V(unsigned k);  // k >= 1
  SummationTriple triple(unsigned k);

 private:
  void extend_locked(unsigned kmax);

  std::shared_mutex mu_;
  std::deque<BivarPoly> a_;
  std::deque<IntPoly> u_;  // u_[k-1] = U_k
  std::deque<IntPoly> v_;
};

/// Process-wide family shared by the free functions and the CLI.
SummationFamily& shared_family();

/// (U_k, V_k, A_{k-1}) with every structural invariant verified.
SummationTriple build_triple(unsigned k);

}  // namespace padicsum
