#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hrg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline bool is_half_integer(const Rational& r) { return den(r) == 2; }

inline Rational half(long long a) { return Rational(Integer(a), Integer(2)); }

inline long long to_ll(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return v.convert_to<long long>();
}

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

namespace detail {
inline bool parse_int(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = Integer(std::string(s.substr(i)));
  if (neg) out = -out;
  return true;
}
}  // namespace detail

// Accepts "p" or "p/q". Decimal notation is rejected on purpose.
inline Rational parse_rational(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  Integer p, q(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::parse_int(s, p)) throw std::invalid_argument("not a fraction: '" + std::string(s) + "'");
  } else {
    if (!detail::parse_int(s.substr(0, slash), p) || !detail::parse_int(s.substr(slash + 1), q))
      throw std::invalid_argument("not a fraction: '" + std::string(s) + "'");
    if (q == 0) throw std::invalid_argument("zero denominator");
  }
  return Rational(p, q);
}

// Common-denominator view of a rational vector: value i equals v[i] / scale.
struct Scaled {
  long long scale = 1;
  std::vector<long long> v;
};

inline Scaled scale_to_integers(const std::vector<Rational>& xs, const Integer& extra = 1) {
  Integer l = extra;
  for (const auto& x : xs) l = boost::multiprecision::lcm(l, den(x));
  Scaled s;
  s.scale = to_ll(l);
  s.v.reserve(xs.size());
  for (const auto& x : xs) s.v.push_back(to_ll(num(x) * (l / den(x))));
  return s;
}

}  // namespace hrg
