// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Slater-Condon matrix elements of the electron repulsion and the
 *        projected Hamiltonian blocks on each symmetry sector.
 */

#pragma once

#include "ptatom/determinant.hpp"
#include "ptatom/integrals.hpp"
#include "ptatom/surd.hpp"
#include "ptatom/symmetry.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptatom {

/// Rational combination of canonical integral symbols.
class SymbolicElement {
 public:
  using Map = std::map<IntegralSymbol, Rational>;

  /// Adds coef * (raw symbol); vanishing symbols are dropped.
  void add(const IntegralSymbol& raw, const Rational& coef) {
    if (coef == 0) return;
    auto c = canonicalize(raw);
    if (!c) return;
    add_canonical(*c, coef);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymbolicElement& operator+=(const SymbolicElement& o) {
    for (const auto& [s, c] : o.terms_) add_canonical(s, c);
    return *this;
  }
  SymbolicElement& operator-=(const SymbolicElement& o) {
    for (const auto& [s, c] : o.terms_) add_canonical(s, -c);
    return *this;
  }
  SymbolicElement& operator*=(const Rational& f) {
    if (f == 0) terms_.clear();
    for (auto& [s, c] : terms_) c *= f;
    return *this;
  }
  friend SymbolicElement operator+(SymbolicElement a, const SymbolicElement& b) { return a += b; }
  friend SymbolicElement operator-(SymbolicElement a, const SymbolicElement& b) { return a -= b; }
  friend SymbolicElement operator*(const Rational& f, SymbolicElement a) { return a *= f; }
  friend bool operator==(const SymbolicElement& a, const SymbolicElement& b) { return a.terms_ == b.terms_; }

  /// Value at nuclear charge Z.
  Rational evaluate(const Rational& Z = Rational(1)) const {
    Rational acc = 0;
    for (const auto& [s, c] : terms_) acc += c * exact_value(s, Z);
    return acc;
  }

  /// Pretty form such as "(11|11) + 2(11|22) - (12|21)". Symbols appear in
  /// table order; alias replaces the display text of selected symbols.
  std::string to_string(const std::map<IntegralSymbol, std::string>& alias = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](const IntegralSymbol& s, const Rational& c) {
      auto it = alias.find(s);
      std::string name = it == alias.end() ? s.to_string() : it->second;
      Rational mag = abs(c);
      std::string coef = mag == 1 ? "" : ptatom::to_string(mag);
      if (first) {
        out += (c < 0 ? "-" : "") + coef + name;
      } else {
        out += (c < 0 ? " - " : " + ") + coef + name;
      }
      first = false;
    };
    for (const auto& s : canonical_symbols()) {
      auto it = terms_.find(s);
      if (it != terms_.end()) emit(it->first, it->second);
    }
    for (const auto& [s, c] : terms_) {
      bool listed = false;
      for (const auto& k : canonical_symbols()) listed = listed || k == s;
      if (!listed) emit(s, c);
    }
    return out;
  }

 private:
  void add_canonical(const IntegralSymbol& s, const Rational& coef) {
    auto [it, inserted] = terms_.try_emplace(s, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Map terms_;
};

namespace detail {

inline int spatial_label(int spin_orbital) { return spin_orbital / 2 + 1; }
inline bool same_spin(int i, int j) { return (i % 2) == (j % 2); }

}  // namespace detail

/// <d1|V_ee|d2> by the Slater-Condon rules with spin integrated out.
inline SymbolicElement slater_condon(SlaterDeterminant d1, SlaterDeterminant d2) {
  if (d1.count() != d2.count()) throw std::invalid_argument("slater_condon: electron counts differ");
  SymbolicElement out;
  const unsigned diff = static_cast<unsigned>(d1.bits() ^ d2.bits());
  const int ndiff = std::popcount(diff);
  using detail::same_spin;
  using detail::spatial_label;
  auto sym = [](int a, int b, int c, int d) {
    return IntegralSymbol{{spatial_label(a), spatial_label(b), spatial_label(c), spatial_label(d)}};
  };
  if (ndiff == 0) {
    auto occ = d1.orbitals();
    for (std::size_t x = 0; x < occ.size(); ++x)
      for (std::size_t y = x + 1; y < occ.size(); ++y) {
        int i = occ[x].index, j = occ[y].index;
        out.add(sym(i, i, j, j), Rational(1));
        if (same_spin(i, j)) out.add(sym(i, j, j, i), Rational(-1));
      }
    return out;
  }
  if (ndiff == 2) {
    int m = -1, p = -1;
    for (int k = 0; k < kNumSpinOrbitals; ++k) {
      if (!(diff & (1u << k))) continue;
      if (d1.occupied(SpinOrbital(k))) m = k;
      else p = k;
    }
    auto e = detail::excite(d2, m, p);
    const Rational sign(e->sign);
    for (auto n : d2.orbitals()) {
      int k = n.index;
      if (k == p) continue;
      if (same_spin(m, p)) out.add(sym(m, p, k, k), sign);
      if (same_spin(m, k) && same_spin(k, p)) out.add(sym(m, k, k, p), -sign);
    }
    return out;
  }
  if (ndiff == 4) {
    std::vector<int> in1, in2;
    for (int k = 0; k < kNumSpinOrbitals; ++k) {
      if (!(diff & (1u << k))) continue;
      (d1.occupied(SpinOrbital(k)) ? in1 : in2).push_back(k);
    }
    const int m = in1[0], n = in1[1], p = in2[0], q = in2[1];
    // d1 = sign * a+_m a+_n a_q a_p d2
    auto s1 = annihilate(d2, SpinOrbital(p));
    auto s2 = annihilate(s1->det, SpinOrbital(q));
    auto s3 = create(s2->det, SpinOrbital(n));
    auto s4 = create(s3->det, SpinOrbital(m));
    const Rational sign(s1->sign * s2->sign * s3->sign * s4->sign);
    if (same_spin(m, p) && same_spin(n, q)) out.add(sym(m, p, n, q), sign);
    if (same_spin(m, q) && same_spin(n, p)) out.add(sym(m, q, n, p), -sign);
    return out;
  }
  return out;
}

/// Kinetic plus nuclear part on V0(N), in units of Z^2.
inline Rational h0_shift(int N) {
  if (N < 1 || N > 10) throw std::out_of_range("N must be in 1..10");
  if (N == 1) return make_rational(-1, 2);
  return Rational(-1) - make_rational(N - 2, 8);
}

/// V_ee on the representative states of one term, with exact normalization.
/// Diagonal entries are rational combinations; the off-diagonal entry is
/// cross_coef * sqrt(cross_root).
struct SectorBlock {
  int N = 0;
  TermSymbol term;
  std::vector<DeterminantExpansion> states;
  std::vector<Rational> norm2;
  std::vector<int> two_s_count;
  std::vector<SymbolicElement> diag;
  SymbolicElement cross;
  Integer cross_root{1};

  std::size_t dim() const { return states.size(); }

  /// Cross entry such as "sqrt(3)(23|32)".
  std::string cross_string(const std::map<IntegralSymbol, std::string>& alias = {}) const {
    if (cross_root == 1) return cross.to_string(alias);
    std::string root = "sqrt(" + cross_root.str() + ")";
    if (cross.terms().size() == 1) {
      const auto& [s, c] = *cross.terms().begin();
      auto it = alias.find(s);
      std::string name = it == alias.end() ? s.to_string() : it->second;
      std::string coef = abs(c) == 1 ? "" : ptatom::to_string(abs(c));
      return (c < 0 ? "-" : "") + coef + root + name;
    }
    return root + "*(" + cross.to_string(alias) + ")";
  }
};

namespace detail {

/// Sum over determinant pairs of conj(a) b <d|V|d'>; imaginary parts must
/// cancel. Single excitations inside a sector are rejected.
inline SymbolicElement expansion_element(const DeterminantExpansion& x, const DeterminantExpansion& y) {
  std::map<IntegralSymbol, GaussianRational> acc;
  for (const auto& [d1, c1] : x.terms())
    for (const auto& [d2, c2] : y.terms()) {
      const int nd = std::popcount(static_cast<unsigned>(d1.bits() ^ d2.bits()));
      if (nd == 2) throw std::logic_error("determinants differing by one orbital inside a symmetry sector");
      if (nd > 4) continue;
      const GaussianRational w = c1.conj() * c2;
      const SymbolicElement e = slater_condon(d1, d2);
      for (const auto& [s, c] : e.terms()) acc[s] += w * GaussianRational(c);
    }
  SymbolicElement out;
  for (const auto& [s, c] : acc) {
    if (!c.is_real()) throw std::logic_error("sector matrix element is not real");
    out.add(s, c.re);
  }
  return out;
}

}  // namespace detail

inline SectorBlock sector_vee_matrix(int N, const TermStates& ts) {
  SectorBlock b;
  b.N = N;
  b.term = ts.term;
  b.states = ts.states;
  b.norm2 = ts.norm2;
  b.two_s_count = ts.two_s_count;
  if (ts.states.empty() || ts.states.size() > 2) throw std::logic_error("sector block must have dimension 1 or 2");
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    auto e = detail::expansion_element(ts.states[i], ts.states[i]);
    b.diag.push_back(Rational(1) / ts.norm2[i] * e);
  }
  if (ts.states.size() == 2) {
    auto raw = detail::expansion_element(ts.states[0], ts.states[1]);
    auto back = detail::expansion_element(ts.states[1], ts.states[0]);
    if (!(raw == back)) throw std::logic_error("sector block is not symmetric");
    const Rational n = ts.norm2[0] * ts.norm2[1];
    if (denominator_of(n) != 1) throw std::logic_error("non-integer norm product");
    auto [s, d] = squarefree_split(numerator_of(n));
    b.cross = (Rational(s) / n) * raw;
    b.cross_root = d;
  }
  return b;
}

/// All sector blocks of V0(N), memoized.
inline const std::vector<SectorBlock>& sector_blocks(int N) {
  if (N < 1 || N > 10) throw std::out_of_range("N must be in 1..10");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<SectorBlock>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;
  }
  auto blocks = std::make_shared<std::vector<SectorBlock>>();
  for (const auto& ts : representative_states(N)) blocks->push_back(sector_vee_matrix(N, ts));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(N, std::move(blocks));
  return *it->second;
}

/// Numeric block Z^2 * shift * I + V_ee(Z). The off-diagonal entry is
/// cross_coef * sqrt(cross_root).
struct PhpBlock {
  TermSymbol term;
  Rational Z;
  std::vector<Rational> diag;
  Rational cross_coef{0};
  Integer cross_root{1};

  std::size_t dim() const { return diag.size(); }
  QuadraticSurd cross() const { return QuadraticSurd(Rational(0), cross_coef, cross_root); }
};

inline PhpBlock php_block(const SectorBlock& b, const Rational& Z) {
  PhpBlock p;
  p.term = b.term;
  p.Z = Z;
  const Rational shift = h0_shift(b.N) * Z * Z;
  for (const auto& e : b.diag) p.diag.push_back(shift + e.evaluate(Z));
  if (b.dim() == 2) {
    p.cross_coef = b.cross.evaluate(Z);
    p.cross_root = b.cross_root;
  }
  return p;
}

/// PHP on the full determinant basis of V0(N) at charge Z, as an exact
/// matrix: Z^2 * shift on the diagonal plus all Slater-Condon elements.
inline Matrix<GaussianRational> lifted_php_matrix(int N, const Rational& Z) {
  auto basis = ground_space_basis(N);
  Matrix<GaussianRational> m(basis.size(), basis.size());
  const Rational shift = h0_shift(N) * Z * Z;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Rational v = slater_condon(basis[i], basis[j]).evaluate(Z);
      if (i == j) v += shift;
      m(i, j) = GaussianRational(v);
    }
  return m;
}

}  // namespace ptatom
