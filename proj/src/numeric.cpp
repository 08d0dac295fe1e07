#include "padicsum/numeric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace padicsum {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!valid_integer_text(text))
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

BigRat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_integer(text));
  auto den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const BigRat& v) { return v.get_den() == 1; }

std::uint64_t work_limit() {
  static const std::uint64_t limit = [] {
    const char* env = std::getenv("PADICSUM_WORK_LIMIT");
    if (env == nullptr || *env == '\0') return kDefaultWorkLimit;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefaultWorkLimit;
    return static_cast<std::uint64_t>(v);
  }();
  return limit;
}

}  // namespace padicsum
