// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rational.hpp
 * @brief Arbitrary precision integers and rationals plus small helpers.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ptatom {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend,
    boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  return Rational(p, q);
}

inline Rational make_rational(long long p, long long q = 1) {
  return make_rational(Integer(p), Integer(q));
}

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  const Integer q = denominator_of(r);
  if (q == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + q.str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// Double approximation, exact to within one ulp for moderate sizes.
inline double to_double(const Rational& r) {
  const Integer p = numerator_of(r);
  const Integer q = denominator_of(r);
  // Scale so both fit comfortably into long double range before dividing.
  const auto bits = static_cast<long>(boost::multiprecision::msb(q));
  if (bits < 900 && (p == 0 || boost::multiprecision::msb(abs(p)) < 900))
    return static_cast<double>(p.convert_to<long double>() /
                               q.convert_to<long double>());
  return r.convert_to<double>();
}

/// Accepts "p", "p/q" and plain decimals like "-6.25".
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) return std::nullopt;
    Integer den = to_int(q);
    if (den == 0) return std::nullopt;
    return Rational(to_int(p), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole = "0";
    if (!is_int(whole)) return std::nullopt;
    if (frac.empty()) return Rational(to_int(whole));
    for (char c : frac)
      if (c < '0' || c > '9') return std::nullopt;
    Integer scale = boost::multiprecision::pow(Integer(10),
                                               static_cast<unsigned>(frac.size()));
    Integer mag = abs(to_int(whole)) * scale + Integer(std::string(frac));
    return Rational(neg ? Integer(-mag) : mag, scale);
  }
  if (!is_int(text)) return std::nullopt;
  return Rational(to_int(text));
}

/// Floor of the square root of n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

/// Exact square root of a rational that is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer p = numerator_of(r), q = denominator_of(r);
  if (!is_square(p) || !is_square(q)) return std::nullopt;
  return Rational(isqrt(p), isqrt(q));
}

/// Writes n = s^2 * d. d is squarefree whenever all prime factors below the
/// search limit were removed and the cofactor left over has at most two
/// prime factors; otherwise d may keep a square factor, which is harmless.
inline std::pair<Integer, Integer> squarefree_split(Integer n) {
  if (n < 0) throw std::domain_error("squarefree_split of negative");
  if (n == 0) return {Integer(0), Integer(1)};
  Integer s = 1, d = 1;
  auto strip = [&](std::uint64_t p) {
    Integer pp(p);
    int e = 0;
    while (n % pp == 0) {
      n /= pp;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= pp;
    if (e % 2 == 1) d *= pp;
  };
  strip(2);
  constexpr std::uint64_t kLimit = 2000000;
  for (std::uint64_t p = 3; p <= kLimit; p += 2) {
    Integer pp(p);
    if (pp * pp * pp > n) break;
    strip(p);
  }
  if (n > 1) {
    if (is_square(n)) {
      s *= isqrt(n);
    } else {
      d *= n;
    }
  }
  return {s, d};
}

}  // namespace ptatom
