#include "padicsum/poly.hpp"

namespace padicsum {

IntPoly poly_add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly poly_scale(const IntPoly& a, const BigInt& s) { return a * s; }
IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }
BigRat poly_eval(const IntPoly& p, const BigRat& at) { return p.eval(at); }

BivarPoly BivarPoly::from_x(const IntPoly& p) {
  std::vector<NPoly> layers;
  layers.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) layers.push_back(NPoly::constant(c));
  return BivarPoly(std::move(layers));
}

BivarPoly BivarPoly::monomial(const BigInt& c, std::size_t n_degree, std::size_t x_degree) {
  std::vector<NPoly> layers(x_degree + 1);
  layers[x_degree] = NPoly::monomial(c, n_degree);
  return BivarPoly(std::move(layers));
}

const NPoly& BivarPoly::layer(std::size_t l) const {
  static const NPoly zero;
  return l < layers_.size() ? layers_[l] : zero;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.layers_.size() > layers_.size()) layers_.resize(o.layers_.size());
  for (std::size_t l = 0; l < o.layers_.size(); ++l) layers_[l] += o.layers_[l];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (o.layers_.size() > layers_.size()) layers_.resize(o.layers_.size());
  for (std::size_t l = 0; l < o.layers_.size(); ++l) layers_[l] -= o.layers_[l];
  trim();
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BigInt& s) {
  for (auto& l : layers_) l *= s;
  trim();
  return *this;
}

BivarPoly BivarPoly::shifted_x(std::size_t s) const {
  if (is_zero()) return {};
  std::vector<NPoly> r(s);
  r.insert(r.end(), layers_.begin(), layers_.end());
  return BivarPoly(std::move(r));
}

IntPoly BivarPoly::eval_n(const BigInt& n0) const {
  std::vector<BigInt> c;
  c.reserve(layers_.size());
  for (const auto& l : layers_) c.push_back(l.eval(n0));
  return IntPoly(std::move(c));
}

BigRat BivarPoly::eval(const BigInt& n0, const BigRat& x0) const {
  BigRat acc = 0;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) acc = acc * x0 + BigRat(it->eval(n0));
  return acc;
}

void BivarPoly::trim() {
  while (!layers_.empty() && layers_.back().is_zero()) layers_.pop_back();
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

// "x", "x^3", or "" for degree 0.
std::string power_text(std::string_view var, std::size_t d) {
  if (d == 0) return "";
  if (d == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(d);
}

// Magnitude of one term without its sign, e.g. "7*x^2", "x", "5".
std::string term_text(const BigInt& magnitude, std::string_view var, std::size_t d) {
  if (d == 0) return magnitude.get_str();
  if (magnitude == 1) return power_text(var, d);
  return magnitude.get_str() + "*" + power_text(var, d);
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty())
    out = (negative ? "-" : "") + body;
  else
    out += (negative ? " - " : " + ") + body;
}

template <class Var>
std::string render_dense(const DensePoly<Var>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coeffs();
  for (std::size_t d = c.size(); d-- > 0;) {
    if (c[d] == 0) continue;
    append_signed(out, c[d] < 0, term_text(abs(c[d]), Var::name, d));
  }
  return out;
}

}  // namespace

std::string render(const IntPoly& p) { return render_dense(p); }
std::string render(const NPoly& p) { return render_dense(p); }

std::string render(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto layers = p.layers();
  for (std::size_t l = layers.size(); l-- > 0;) {
    const NPoly& layer = layers[l];
    if (layer.is_zero()) continue;
    std::size_t nonzero = 0, only = 0;
    for (std::size_t i = 0; i < layer.coeffs().size(); ++i)
      if (layer.coeffs()[i] != 0) ++nonzero, only = i;

    if (nonzero == 1) {
      // Single n-monomial: c * n^a * x^l.
      const BigInt& c = layer.coeffs()[only];
      std::string body;
      const std::string npart = power_text(NVar::name, only);
      const std::string xpart = power_text(XVar::name, l);
      if (abs(c) != 1 || (npart.empty() && xpart.empty())) body = BigInt(abs(c)).get_str();
      for (const auto* part : {&npart, &xpart}) {
        if (part->empty()) continue;
        if (!body.empty()) body += "*";
        body += *part;
      }
      append_signed(out, c < 0, body);
    } else {
      std::string body = "(" + render(layer) + ")";
      if (l > 0) body += "*" + power_text(XVar::name, l);
      append_signed(out, false, body);
    }
  }
  return out;
}

std::vector<std::string> coefficient_strings(std::span<const BigInt> coeffs) {
  std::vector<std::string> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

}  // namespace padicsum
