// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file integrals.hpp
 * @brief Coulomb and exchange integrals (ab|cd) over the n<=2 hydrogen
 *        orbitals, in chemists' notation and in units of Z.
 *
 * Spatial labels: 1 = 1s, 2 = 2s, 3 = 2p3, 4 = 2p1, 5 = 2p2.
 *
 * Two independent evaluations back the hard-coded table:
 *  - exact: Fourier representation, closed sphere moments and partial
 *    fractions of the radial rational function;
 *  - oracle: the same Fourier representation with an adaptive
 *    Gauss-Kronrod radial quadrature.
 */

#pragma once

#include "ptatom/rational.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptatom {

struct UnknownIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegralSymbol {
  std::array<int, 4> idx{1, 1, 1, 1};

  int a() const { return idx[0]; }
  int b() const { return idx[1]; }
  int c() const { return idx[2]; }
  int d() const { return idx[3]; }

  /// Raw "(ab|cd)".
  std::string raw() const {
    return "(" + std::to_string(idx[0]) + std::to_string(idx[1]) + "|" + std::to_string(idx[2]) +
           std::to_string(idx[3]) + ")";
  }

  /// Display form: exchange classes print as (ab|ba).
  std::string to_string() const {
    if (idx[0] != idx[1] && idx[0] == idx[2] && idx[1] == idx[3])
      return IntegralSymbol{{idx[0], idx[1], idx[1], idx[0]}}.raw();
    return raw();
  }

  static std::optional<IntegralSymbol> parse(const std::string& s) {
    if (s.size() != 7 || s[0] != '(' || s[3] != '|' || s[6] != ')') return std::nullopt;
    IntegralSymbol out;
    const int pos[4] = {1, 2, 4, 5};
    for (int k = 0; k < 4; ++k) {
      int v = s[pos[k]] - '0';
      if (v < 1 || v > 5) return std::nullopt;
      out.idx[k] = v;
    }
    return out;
  }

  friend auto operator<=>(const IntegralSymbol&, const IntegralSymbol&) = default;
};

/// Canonical representative under (ab|cd)=(ba|cd)=(ab|dc)=(cd|ab) and any
/// permutation of the p axes (relabelled 3,4,5 by first appearance). Returns
/// nullopt when the integral vanishes because some p axis occurs an odd
/// number of times.
inline std::optional<IntegralSymbol> canonicalize(const IntegralSymbol& s) {
  std::array<int, 6> count{};
  for (int v : s.idx) {
    if (v < 1 || v > 5) throw std::out_of_range("integral label");
    ++count[v];
  }
  for (int p = 3; p <= 5; ++p)
    if (count[p] % 2) return std::nullopt;
  const auto [a, b, c, d] = s.idx;
  const std::array<std::array<int, 4>, 8> variants = {{{a, b, c, d},
                                                        {b, a, c, d},
                                                        {a, b, d, c},
                                                        {b, a, d, c},
                                                        {c, d, a, b},
                                                        {d, c, a, b},
                                                        {c, d, b, a},
                                                        {d, c, b, a}}};
  std::optional<IntegralSymbol> best;
  for (auto v : variants) {
    std::array<int, 6> relabel{0, 1, 2, 0, 0, 0};
    int next = 3;
    for (int& x : v) {
      if (x >= 3) {
        if (!relabel[x]) relabel[x] = next++;
        x = relabel[x];
      }
    }
    IntegralSymbol cand{v};
    if (!best || cand < *best) best = cand;
  }
  return best;
}

/// Canonical symbols in display order.
inline const std::vector<IntegralSymbol>& canonical_symbols() {
  static const std::vector<IntegralSymbol> kSyms = {
      {{1, 1, 1, 1}}, {{1, 1, 2, 2}}, {{1, 2, 1, 2}}, {{1, 1, 3, 3}}, {{1, 3, 1, 3}}, {{2, 2, 2, 2}},
      {{2, 2, 3, 3}}, {{2, 3, 2, 3}}, {{3, 3, 3, 3}}, {{3, 3, 4, 4}}, {{3, 4, 3, 4}}};
  return kSyms;
}

inline bool is_exchange(const IntegralSymbol& canonical) {
  return canonical.a() != canonical.b() && canonical.a() == canonical.c() && canonical.b() == canonical.d();
}

class IntegralTable {
 public:
  static const IntegralTable& instance() {
    static const IntegralTable kTable;
    return kTable;
  }

  const std::map<IntegralSymbol, Rational>& entries() const { return values_; }

  /// Coefficient of Z.
  Rational coefficient(const IntegralSymbol& s) const {
    auto c = canonicalize(s);
    if (!c) return Rational(0);
    auto it = values_.find(*c);
    if (it == values_.end()) throw UnknownIntegralError("integral outside the n<=2 table: " + s.raw());
    return it->second;
  }

 private:
  IntegralTable() {
    const auto& s = canonical_symbols();
    const std::array<Rational, 11> v = {make_rational(5, 8),       make_rational(17, 81),    make_rational(16, 729),
                                        make_rational(59, 243),    make_rational(112, 6561), make_rational(77, 512),
                                        make_rational(83, 512),    make_rational(15, 512),   make_rational(501, 2560),
                                        make_rational(447, 2560),  make_rational(27, 2560)};
    for (std::size_t i = 0; i < s.size(); ++i) values_.emplace(s[i], v[i]);
  }
  std::map<IntegralSymbol, Rational> values_;
};

inline Rational exact_value(const IntegralSymbol& s, const Rational& Z) {
  return IntegralTable::instance().coefficient(s) * Z;
}

/// One term of a Fourier-transformed orbital product:
/// coef * (i)^imag * sqrt(2)^sqrt2 * Z^zpow * k^mono / (pole*Z^2 + |k|^2)^power.
struct FourierTerm {
  Rational coef;
  int imag = 0;
  int sqrt2 = 0;
  int zpow = 0;
  Rational pole;
  int power = 0;
  std::array<int, 3> mono{0, 0, 0};  // exponents of k1, k2, k3
};

struct FourierProduct {
  std::vector<FourierTerm> terms;

  std::complex<double> evaluate(const std::array<double, 3>& k, double Z) const {
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    std::complex<double> acc = 0;
    for (const auto& t : terms) {
      double v = to_double(t.coef) * std::pow(std::sqrt(2.0), t.sqrt2) * std::pow(Z, t.zpow) /
                 std::pow(to_double(t.pole) * Z * Z + k2, t.power);
      for (int a = 0; a < 3; ++a) v *= std::pow(k[a], t.mono[a]);
      acc += t.imag ? std::complex<double>(0, v) : std::complex<double>(v, 0);
    }
    return acc;
  }
};

namespace detail {

/// Axis number 1..3 of a p label (3 -> axis 3, 4 -> axis 1, 5 -> axis 2).
inline int p_axis(int label) { return label == 3 ? 3 : label == 4 ? 1 : 2; }

inline std::array<int, 3> unit_mono(int axis, int power = 1) {
  std::array<int, 3> m{0, 0, 0};
  m[axis - 1] = power;
  return m;
}

}  // namespace detail

/// Fourier transform of the pointwise product of spatial orbitals a and b.
inline FourierProduct fourier_product(int a, int b) {
  if (a < 1 || a > 5 || b < 1 || b > 5) throw std::out_of_range("orbital label");
  if (a > b) std::swap(a, b);
  const Rational four = 4, one = 1, nine4 = make_rational(9, 4);
  FourierProduct f;
  using detail::unit_mono;
  if (a == 1 && b == 1) {
    f.terms = {{16, 0, 0, 4, four, 2, {}}};
  } else if (a == 2 && b == 2) {
    f.terms = {{2, 0, 0, 4, one, 2, {}}, {-7, 0, 0, 6, one, 3, {}}, {6, 0, 0, 8, one, 4, {}}};
  } else if (a == 1 && b == 2) {
    f.terms = {{4, 0, 1, 4, nine4, 2, {}}, {-9, 0, 1, 6, nine4, 3, {}}};
  } else if (a >= 3 && a == b) {
    int j = detail::p_axis(a);
    f.terms = {{1, 0, 0, 6, one, 3, {}}, {-6, 0, 0, 6, one, 4, unit_mono(j, 2)}};
  } else if (a == 1) {
    f.terms = {{-6, 1, 1, 5, nine4, 3, unit_mono(detail::p_axis(b))}};
  } else if (a == 2) {
    int j = detail::p_axis(b);
    f.terms = {{6, 1, 0, 7, one, 4, unit_mono(j)}, {-3, 1, 0, 5, one, 3, unit_mono(j)}};
  } else {
    auto m = unit_mono(detail::p_axis(a));
    m[detail::p_axis(b) - 1] += 1;
    f.terms = {{-6, 0, 0, 6, one, 4, m}};
  }
  return f;
}

namespace detail {

inline Integer double_factorial(int n) {
  Integer r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

/// Average of k1^m1 k2^m2 k3^m3 over the unit sphere (integral / 4 pi).
inline Rational sphere_average(const std::array<int, 3>& m) {
  for (int x : m)
    if (x % 2) return Rational(0);
  Integer num = double_factorial(m[0] - 1) * double_factorial(m[1] - 1) * double_factorial(m[2] - 1);
  return Rational(num, double_factorial(m[0] + m[1] + m[2] + 1));
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Integral over k in (0, inf) of dk / (k^2 + a^2)^j, divided by pi.
inline Rational radial_basic_over_pi(const Rational& a, int j) {
  Rational a_pow = 1;
  for (int i = 0; i < 2 * j - 1; ++i) a_pow *= a;
  Integer two_pow = Integer(1) << (2 * j - 1);
  return Rational(binomial(2 * j - 2, j - 1)) / (Rational(two_pow) * a_pow);
}

/// Integral over k in (0, inf) of k^(2q) / prod_i (k^2 + mu_i)^{n_i}, divided
/// by pi, via partial fractions in s = k^2.
inline Rational radial_rational_over_pi(int q, std::map<Rational, int> factors) {
  int total = 0;
  for (const auto& [mu, n] : factors) total += n;
  if (q >= total) throw std::domain_error("radial integrand does not decay");
  Rational acc = 0;
  for (const auto& [mu_i, n_i] : factors) {
    // Taylor coefficients in t = s + mu_i up to t^(n_i - 1).
    std::vector<Rational> series(static_cast<std::size_t>(n_i), Rational(0));
    for (int r = 0; r <= q && r < n_i; ++r) {
      Rational c = Rational(binomial(q, r));
      for (int k = 0; k < q - r; ++k) c *= -mu_i;
      series[static_cast<std::size_t>(r)] = c;
    }
    for (const auto& [mu_k, n_k] : factors) {
      if (mu_k == mu_i) continue;
      const Rational delta = mu_k - mu_i;
      std::vector<Rational> fac(static_cast<std::size_t>(n_i), Rational(0));
      Rational dpow = 1;
      for (int k = 0; k < n_k; ++k) dpow *= delta;
      for (int jj = 0; jj < n_i; ++jj) {
        Rational c = Rational(binomial(n_k + jj - 1, jj)) / dpow;
        if (jj % 2) c = -c;
        fac[static_cast<std::size_t>(jj)] = c;
        dpow *= delta;
      }
      std::vector<Rational> prod(static_cast<std::size_t>(n_i), Rational(0));
      for (int x = 0; x < n_i; ++x)
        for (int y = 0; x + y < n_i; ++y)
          prod[static_cast<std::size_t>(x + y)] += series[static_cast<std::size_t>(x)] * fac[static_cast<std::size_t>(y)];
      series = std::move(prod);
    }
    auto a = exact_sqrt(mu_i);
    if (!a) throw std::domain_error("pole is not a rational square");
    for (int j = 1; j <= n_i; ++j)
      acc += series[static_cast<std::size_t>(n_i - j)] * radial_basic_over_pi(*a, j);
  }
  return acc;
}

}  // namespace detail

/// Z-coefficient of (ab|cd) from the Fourier representation
/// (1/(2 pi^2)) * int dk |k|^-2 conj(F_ab(k)) F_cd(k), evaluated exactly.
inline Rational residue_value(const IntegralSymbol& s) {
  const auto f = fourier_product(s.a(), s.b());
  const auto g = fourier_product(s.c(), s.d());
  Rational acc = 0;
  for (const auto& t1 : f.terms)
    for (const auto& t2 : g.terms) {
      std::array<int, 3> m{};
      for (int a = 0; a < 3; ++a) m[a] = t1.mono[a] + t2.mono[a];
      Rational ang = detail::sphere_average(m);
      if (ang == 0) continue;
      // conj(i^e1) * i^e2
      int ipow = (t2.imag - t1.imag + 4) % 4;
      if (ipow % 2) throw std::logic_error("imaginary integrand survives");
      Rational c = t1.coef * t2.coef * (ipow == 2 ? Rational(-1) : Rational(1));
      int s2 = t1.sqrt2 + t2.sqrt2;
      if (s2 % 2) throw std::domain_error("irrational integral: " + s.raw());
      for (int k = 0; k < s2 / 2; ++k) c *= 2;
      std::map<Rational, int> factors;
      factors[t1.pole] += t1.power;
      factors[t2.pole] += t2.power;
      int deg = m[0] + m[1] + m[2];
      // (1/(2 pi^2)) * 4 pi * ang * pi * R = 2 * ang * R
      acc += 2 * c * ang * detail::radial_rational_over_pi(deg / 2, factors);
    }
  return acc;
}

struct OracleResult {
  double value = 0;
  double error_estimate = 0;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical value of (ab|cd) at charge Z: sphere moments in closed form and
/// an adaptive radial quadrature over k = Z t / (1 - t).
inline OracleResult oracle_value(const IntegralSymbol& s, double Z) {
  const auto f = fourier_product(s.a(), s.b());
  const auto g = fourier_product(s.c(), s.d());
  struct Piece {
    double coef;
    int deg;
    double p1, p2;
    int n1, n2;
  };
  std::vector<Piece> pieces;
  for (const auto& t1 : f.terms)
    for (const auto& t2 : g.terms) {
      std::array<int, 3> m{};
      for (int a = 0; a < 3; ++a) m[a] = t1.mono[a] + t2.mono[a];
      double ang = to_double(detail::sphere_average(m));
      if (ang == 0) continue;
      int ipow = (t2.imag - t1.imag + 4) % 4;
      double c = to_double(t1.coef) * to_double(t2.coef) * (ipow == 2 ? -1.0 : 1.0) *
                 std::pow(std::sqrt(2.0), t1.sqrt2 + t2.sqrt2) * std::pow(Z, t1.zpow + t2.zpow);
      pieces.push_back({c * ang * 4.0 * M_PI / (2.0 * M_PI * M_PI), m[0] + m[1] + m[2],
                        to_double(t1.pole) * Z * Z, to_double(t2.pole) * Z * Z, t1.power, t2.power});
    }
  auto radial = [&](double k) {
    double v = 0;
    for (const auto& p : pieces)
      v += p.coef * std::pow(k, p.deg) / (std::pow(p.p1 + k * k, p.n1) * std::pow(p.p2 + k * k, p.n2));
    return v;
  };
  auto integrand = [&](double t) {
    if (t >= 1.0) return 0.0;
    double k = Z * t / (1.0 - t);
    double jac = Z / ((1.0 - t) * (1.0 - t));
    return radial(k) * jac;
  };
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 20, 1e-13, &err);
  if (!(std::abs(err) <= 1e-10 * std::max(1.0, std::abs(v))))
    throw QuadratureError("quadrature did not converge for " + s.raw() + ", error estimate " + std::to_string(err));
  return {v, err};
}

}  // namespace ptatom
