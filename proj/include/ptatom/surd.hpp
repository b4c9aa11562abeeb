// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file surd.hpp
 * @brief Exact numbers a + b*sqrt(d) and sqrt(m)*(a + b*sqrt(d)).
 */

#pragma once

#include "ptatom/rational.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace ptatom {

class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT
  QuadraticSurd(long long a) : a_(a) {}            // NOLINT

  /// a + b*sqrt(n) for any n >= 0; square factors of n are pulled out.
  QuadraticSurd(Rational a, Rational b, const Integer& n) : a_(std::move(a)) {
    if (n < 0) throw std::domain_error("negative radicand");
    auto [s, d] = squarefree_split(n);
    if (d == 1) {
      a_ += b * Rational(s);
    } else if (b != 0 && s != 0) {
      b_ = b * Rational(s);
      d_ = d;
    }
  }

  /// sqrt(r) for rational r >= 0.
  static QuadraticSurd sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("sqrt of negative rational");
    Integer p = numerator_of(r), q = denominator_of(r);
    return QuadraticSurd(Rational(0), Rational(1, q), p * q);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticSurd conjugate() const {
    QuadraticSurd r = *this;
    r.b_ = -r.b_;
    return r;
  }

  int sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  double to_double() const {
    return ptatom::to_double(a_) + ptatom::to_double(b_) * std::sqrt(d_.convert_to<double>());
  }

  QuadraticSurd& operator+=(const QuadraticSurd& o) {
    merge_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
  }
  QuadraticSurd& operator-=(const QuadraticSurd& o) {
    merge_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
  }
  QuadraticSurd& operator*=(const QuadraticSurd& o) {
    merge_radicand(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    normalize();
    return *this;
  }
  QuadraticSurd& operator/=(const QuadraticSurd& o) {
    merge_radicand(o);
    const Rational n = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_ == 0 ? Integer(0) : o.d_);
    if (n == 0) throw std::domain_error("surd division by zero");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }
  friend QuadraticSurd operator-(QuadraticSurd x) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
  }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  /// "p/q + r/s*sqrt(d)".
  std::string to_string() const {
    if (b_ == 0) return ptatom::to_string(a_);
    std::string root = "sqrt(" + d_.str() + ")";
    auto coef = [&](const Rational& c) { return abs(c) == 1 ? root : ptatom::to_string(abs(c)) + "*" + root; };
    if (a_ == 0) return (b_ < 0 ? "-" : "") + coef(b_);
    return ptatom::to_string(a_) + (b_ < 0 ? " - " : " + ") + coef(b_);
  }

  /// Inverse of to_string.
  static std::optional<QuadraticSurd> parse(std::string s) {
    auto root_pos = s.find("sqrt(");
    if (root_pos == std::string::npos) {
      auto r = parse_rational(s);
      if (!r) return std::nullopt;
      return QuadraticSurd(*r);
    }
    auto close = s.find(')', root_pos);
    if (close == std::string::npos) return std::nullopt;
    auto d = parse_rational(s.substr(root_pos + 5, close - root_pos - 5));
    if (!d || denominator_of(*d) != 1) return std::nullopt;
    std::string head = s.substr(0, root_pos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    Rational a = 0, b = 1;
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < head.size(); ++i)
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] == ' ') split = i;
    std::string bpart = head;
    if (split != std::string::npos) {
      auto ar = parse_rational(head.substr(0, split));
      if (!ar) return std::nullopt;
      a = *ar;
      bpart = head.substr(split);
    }
    bool neg = false;
    std::string digits;
    for (char c : bpart) {
      if (c == '-') neg = !neg;
      else if (c != '+' && c != ' ') digits += c;
    }
    if (!digits.empty()) {
      auto br = parse_rational(digits);
      if (!br) return std::nullopt;
      b = *br;
    }
    if (neg) b = -b;
    return QuadraticSurd(a, b, numerator_of(*d));
  }

 private:
  void merge_radicand(const QuadraticSurd& o) {
    if (o.b_ == 0 || b_ == 0) {
      if (b_ == 0 && o.b_ != 0) d_ = o.d_;
      return;
    }
    if (d_ != o.d_) throw std::domain_error("surd arithmetic with different radicands");
  }
  void normalize() {
    if (b_ == 0) d_ = 0;
  }

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

/// Exact sign of p + q*sqrt(d1) + r*sqrt(d2).
inline int sign_of_sum(const QuadraticSurd& u, const Rational& r, const Integer& d2) {
  if (r == 0 || d2 == 0) return u.sign();
  if (u.is_rational() || u.d() == d2) return (u + QuadraticSurd(Rational(0), r, d2)).sign();
  const int su = u.sign(), sv = r.sign();
  if (su == 0) return sv;
  if (su == sv) return su;
  // Compare u^2 with r^2 d2.
  QuadraticSurd diff = u * u - QuadraticSurd(r * r * Rational(d2));
  const int s = diff.sign();
  if (s == 0) return 0;
  return s > 0 ? su : sv;
}

/// Exact three-way comparison of two surds, possibly with different radicands.
inline int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational() || y.is_rational() || x.d() == y.d()) return (x - y).sign();
  QuadraticSurd u(x.a() - y.a(), x.b(), x.d());
  return sign_of_sum(u, -y.b(), y.d());
}

/// sqrt(m) * s with m a squarefree positive integer.
struct ScaledSurd {
  Integer m{1};
  QuadraticSurd s;

  double to_double() const { return std::sqrt(m.convert_to<double>()) * s.to_double(); }
  int sign() const { return s.sign(); }

  std::string to_string() const {
    if (m == 1) return s.to_string();
    if (s.is_rational()) {
      const Rational& a = s.a();
      if (a == 0) return "0";
      std::string root = "sqrt(" + m.str() + ")";
      if (a == 1) return root;
      if (a == -1) return "-" + root;
      return ptatom::to_string(a) + "*" + root;
    }
    return "sqrt(" + m.str() + ")*(" + s.to_string() + ")";
  }

  friend bool operator==(const ScaledSurd& x, const ScaledSurd& y) {
    if (x.s.sign() == 0 && y.s.sign() == 0) return true;
    return x.m == y.m && x.s == y.s;
  }
};

}  // namespace ptatom
