#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padicsum/numeric.hpp"

namespace padicsum {

struct XVar {
  static constexpr std::string_view name = "x";
};
struct NVar {
  static constexpr std::string_view name = "n";
};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of var^i; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients and degree -1.
template <class Var>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const BigInt& c) { return DensePoly(std::vector<BigInt>{c}); }
  static DensePoly monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = c;
    return DensePoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::span<const BigInt> coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const BigInt& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) { return a *= BigInt(-1); }
  friend DensePoly operator*(DensePoly a, const BigInt& s) { return a *= s; }
  friend DensePoly operator*(const BigInt& s, DensePoly a) { return a *= s; }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(r));
  }

  /// Multiplies by var^s.
  DensePoly shifted(std::size_t s) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(s, BigInt(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return DensePoly(std::move(r));
  }

  // Horner.
  BigRat eval(const BigRat& at) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + BigRat(*it);
    return acc;
  }
  BigInt eval(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

using IntPoly = DensePoly<XVar>;
using NPoly = DensePoly<NVar>;

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const BigInt& s);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
BigRat poly_eval(const IntPoly& p, const BigRat& at);

/// Polynomial in x whose coefficient of x^l is a polynomial in n:
/// sum_l layer(l)(n) * x^l. Trailing zero layers are trimmed.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<NPoly> layers) : layers_(std::move(layers)) { trim(); }

  static BivarPoly from_x(const IntPoly& p);
  // c * n^n_degree * x^x_degree
  static BivarPoly monomial(const BigInt& c, std::size_t n_degree, std::size_t x_degree);

  bool is_zero() const noexcept { return layers_.empty(); }
  long x_degree() const noexcept { return static_cast<long>(layers_.size()) - 1; }
  std::span<const NPoly> layers() const noexcept { return layers_; }
  const NPoly& layer(std::size_t l) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BigInt& s);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const BigInt& s) { return a *= s; }
  friend BivarPoly operator*(const BigInt& s, BivarPoly a) { return a *= s; }

  /// Multiplies by x^s.
  BivarPoly shifted_x(std::size_t s) const;

  /// Substitutes n = n0, leaving a polynomial in x.
  IntPoly eval_n(const BigInt& n0) const;
  BigRat eval(const BigInt& n0, const BigRat& x0) const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void trim();

  std::vector<NPoly> layers_;
};

inline IntPoly bivar_eval_n(const BivarPoly& a, const BigInt& n0) { return a.eval_n(n0); }
inline BigRat bivar_eval(const BivarPoly& a, const BigInt& n0, const BigRat& x0) { return a.eval(n0, x0); }

BigInt binomial(unsigned long n, unsigned long k);

// Canonical text: descending powers, explicit signs, '*' between factors,
// e.g. "x^3 - 7*x^2 + 6*x - 1" and "(n - 2)*x + 1".
std::string render(const IntPoly& p);
std::string render(const NPoly& p);
std::string render(const BivarPoly& p);

// Little-endian coefficient strings, the machine dump layout.
std::vector<std::string> coefficient_strings(std::span<const BigInt> coeffs);

}  // namespace padicsum
