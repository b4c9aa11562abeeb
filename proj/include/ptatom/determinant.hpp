// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file determinant.hpp
 * @brief Slater determinants over the ten n<=2 hydrogen spin-orbitals and
 *        exact one- and two-body operator application.
 *
 * Spin-orbital index i: spatial orbital i/2 in the order 1s, 2s, 2p3, 2p1,
 * 2p2 and spin up iff i is even. A determinant stores its orbitals in
 * ascending index order, which fixes its sign.
 */

#pragma once

#include "ptatom/gaussian_rational.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptatom {

inline constexpr int kNumSpinOrbitals = 10;
inline constexpr int kNumSpatial = 5;

enum class Spatial : std::uint8_t { k1s = 0, k2s = 1, k2p3 = 2, k2p1 = 3, k2p2 = 4 };

struct SpinOrbital {
  int index = 0;

  constexpr SpinOrbital() = default;
  constexpr explicit SpinOrbital(int i) : index(i) {
    if (i < 0 || i >= kNumSpinOrbitals) throw std::out_of_range("spin-orbital index");
  }
  constexpr SpinOrbital(Spatial s, bool up) : index(2 * static_cast<int>(s) + (up ? 0 : 1)) {}

  constexpr int spatial_index() const { return index / 2; }
  constexpr Spatial spatial() const { return static_cast<Spatial>(index / 2); }
  constexpr bool spin_up() const { return index % 2 == 0; }
  constexpr bool is_p() const { return index >= 4; }

  /// Label 1..5 with a combining overline for spin down, e.g. "1̄".
  std::string label() const {
    std::string s(1, static_cast<char>('1' + spatial_index()));
    if (!spin_up()) s += "̄";
    return s;
  }

  friend constexpr bool operator==(SpinOrbital a, SpinOrbital b) { return a.index == b.index; }
};

class SlaterDeterminant {
 public:
  constexpr SlaterDeterminant() = default;
  constexpr explicit SlaterDeterminant(std::uint16_t bits) : bits_(bits) {
    if (bits >= (1u << kNumSpinOrbitals)) throw std::out_of_range("determinant bits");
  }
  static SlaterDeterminant from_orbitals(const std::vector<int>& idx) {
    std::uint16_t b = 0;
    for (int i : idx) {
      if (i < 0 || i >= kNumSpinOrbitals) throw std::out_of_range("spin-orbital index");
      if (b & (1u << i)) throw std::invalid_argument("orbital listed twice");
      b |= static_cast<std::uint16_t>(1u << i);
    }
    return SlaterDeterminant(b);
  }
  static constexpr SlaterDeterminant full() { return SlaterDeterminant(0x3FF); }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr int count() const { return std::popcount(static_cast<unsigned>(bits_)); }
  constexpr bool occupied(SpinOrbital o) const { return (bits_ >> o.index) & 1u; }
  constexpr bool has_core() const { return (bits_ & 0x3u) == 0x3u; }

  /// Number of occupied orbitals with index below o.
  constexpr int count_below(SpinOrbital o) const {
    return std::popcount(static_cast<unsigned>(bits_ & ((1u << o.index) - 1u)));
  }

  std::vector<SpinOrbital> orbitals() const {
    std::vector<SpinOrbital> out;
    for (int i = 0; i < kNumSpinOrbitals; ++i)
      if (bits_ & (1u << i)) out.emplace_back(i);
    return out;
  }

  int num_p() const { return std::popcount(static_cast<unsigned>(bits_ & 0x3F0u)); }
  int parity() const { return num_p() % 2 == 0 ? 1 : -1; }
  int twice_ms() const {
    return std::popcount(static_cast<unsigned>(bits_ & 0x155u)) -
           std::popcount(static_cast<unsigned>(bits_ & 0x2AAu));
  }

  std::string to_string() const {
    std::string s = "|";
    bool first = true;
    for (auto o : orbitals()) {
      if (!first) s += " ";
      s += o.label();
      first = false;
    }
    return s + "⟩";
  }

  friend constexpr auto operator<=>(SlaterDeterminant a, SlaterDeterminant b) = default;

 private:
  std::uint16_t bits_ = 0;
};

struct SignedDeterminant {
  SlaterDeterminant det;
  int sign = 1;
};

/// Removes o; nullopt when o is empty.
inline std::optional<SignedDeterminant> annihilate(SlaterDeterminant d, SpinOrbital o) {
  if (!d.occupied(o)) return std::nullopt;
  int sign = d.count_below(o) % 2 == 0 ? 1 : -1;
  return SignedDeterminant{SlaterDeterminant(static_cast<std::uint16_t>(d.bits() & ~(1u << o.index))), sign};
}

/// Inserts o; nullopt when o is already occupied.
inline std::optional<SignedDeterminant> create(SlaterDeterminant d, SpinOrbital o) {
  if (d.occupied(o)) return std::nullopt;
  int sign = d.count_below(o) % 2 == 0 ? 1 : -1;
  return SignedDeterminant{SlaterDeterminant(static_cast<std::uint16_t>(d.bits() | (1u << o.index))), sign};
}

class DeterminantExpansion {
 public:
  using Map = std::map<SlaterDeterminant, GaussianRational>;

  DeterminantExpansion() = default;
  explicit DeterminantExpansion(SlaterDeterminant d) { terms_.emplace(d, GaussianRational(1)); }
  DeterminantExpansion(SlaterDeterminant d, GaussianRational c) { add(d, std::move(c)); }

  void add(SlaterDeterminant d, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussianRational coefficient(SlaterDeterminant d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  /// <this|other>, antilinear in the first slot.
  GaussianRational inner(const DeterminantExpansion& other) const {
    GaussianRational acc;
    for (const auto& [d, c] : terms_) {
      auto it = other.terms_.find(d);
      if (it != other.terms_.end()) acc += c.conj() * it->second;
    }
    return acc;
  }
  Rational norm2() const {
    Rational acc = 0;
    for (const auto& [d, c] : terms_) acc += c.norm2();
    return acc;
  }
  bool is_real() const {
    for (const auto& [d, c] : terms_)
      if (!c.is_real()) return false;
    return true;
  }

  DeterminantExpansion& operator+=(const DeterminantExpansion& o) {
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  DeterminantExpansion& operator-=(const DeterminantExpansion& o) {
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  DeterminantExpansion& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }
  friend DeterminantExpansion operator+(DeterminantExpansion a, const DeterminantExpansion& b) { return a += b; }
  friend DeterminantExpansion operator-(DeterminantExpansion a, const DeterminantExpansion& b) { return a -= b; }
  friend DeterminantExpansion operator*(const GaussianRational& s, DeterminantExpansion a) { return a *= s; }
  friend bool operator==(const DeterminantExpansion& a, const DeterminantExpansion& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      if (!first) s += " + ";
      s += "(" + ptatom::to_string(c) + ")" + d.to_string();
      first = false;
    }
    return s;
  }

 private:
  Map terms_;
};

/// Linear map on the spin-orbital space: m[p][q] = <p|b|q>.
using OrbitalMap = std::array<std::array<GaussianRational, kNumSpinOrbitals>, kNumSpinOrbitals>;

namespace detail {

/// Applies a_p^dagger a_q to d.
inline std::optional<SignedDeterminant> excite(SlaterDeterminant d, int p, int q) {
  auto a = annihilate(d, SpinOrbital(q));
  if (!a) return std::nullopt;
  auto c = create(a->det, SpinOrbital(p));
  if (!c) return std::nullopt;
  return SignedDeterminant{c->det, a->sign * c->sign};
}

}  // namespace detail

/// Sum over electrons of b acting on each orbital slot.
inline DeterminantExpansion apply_one_body(const OrbitalMap& b, const DeterminantExpansion& x) {
  DeterminantExpansion out;
  for (const auto& [d, coef] : x.terms()) {
    for (int q = 0; q < kNumSpinOrbitals; ++q) {
      if (!d.occupied(SpinOrbital(q))) continue;
      for (int p = 0; p < kNumSpinOrbitals; ++p) {
        if (b[p][q].is_zero()) continue;
        auto e = detail::excite(d, p, q);
        if (!e) continue;
        out.add(e->det, coef * b[p][q] * GaussianRational(e->sign));
      }
    }
  }
  return out;
}

inline OrbitalMap compose(const OrbitalMap& a, const OrbitalMap& b) {
  OrbitalMap m{};
  for (int i = 0; i < kNumSpinOrbitals; ++i)
    for (int k = 0; k < kNumSpinOrbitals; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < kNumSpinOrbitals; ++j) {
        if (b[k][j].is_zero()) continue;
        m[i][j] += a[i][k] * b[k][j];
      }
    }
  return m;
}

/// (sum_i b(i))^2 = sum_i b^2(i) + sum_{i != j} b(i) b(j).
inline DeterminantExpansion apply_two_body_product(const OrbitalMap& b, const DeterminantExpansion& x) {
  DeterminantExpansion out = apply_one_body(compose(b, b), x);
  for (const auto& [d, coef] : x.terms()) {
    for (int q = 0; q < kNumSpinOrbitals; ++q) {
      if (!d.occupied(SpinOrbital(q))) continue;
      for (int s = 0; s < kNumSpinOrbitals; ++s) {
        if (s == q || !d.occupied(SpinOrbital(s))) continue;
        // a_p^dag a_r^dag a_s a_q with b_pq b_rs
        auto a1 = annihilate(d, SpinOrbital(q));
        auto a2 = annihilate(a1->det, SpinOrbital(s));
        for (int r = 0; r < kNumSpinOrbitals; ++r) {
          if (b[r][s].is_zero()) continue;
          auto c1 = create(a2->det, SpinOrbital(r));
          if (!c1) continue;
          for (int p = 0; p < kNumSpinOrbitals; ++p) {
            if (b[p][q].is_zero()) continue;
            auto c2 = create(c1->det, SpinOrbital(p));
            if (!c2) continue;
            int sg = a1->sign * a2->sign * c1->sign * c2->sign;
            out.add(c2->det, coef * b[p][q] * b[r][s] * GaussianRational(sg));
          }
        }
      }
    }
  }
  return out;
}

/// Particle-hole dual. A determinant |1 1̄ psi_1 ... psi_k> with coefficient
/// alpha goes to conj(alpha) a(psi_k) ... a(psi_1) |all ten occupied>.
inline DeterminantExpansion dual(const DeterminantExpansion& x) {
  DeterminantExpansion out;
  for (const auto& [d, coef] : x.terms()) {
    if (!d.has_core()) throw std::domain_error("dual: determinant lacks a 1s orbital");
    SignedDeterminant cur{SlaterDeterminant::full(), 1};
    for (auto o : d.orbitals()) {
      if (o.index < 2) continue;
      auto a = annihilate(cur.det, o);
      cur = {a->det, cur.sign * a->sign};
    }
    out.add(cur.det, coef.conj() * GaussianRational(cur.sign));
  }
  return out;
}

/// Orbital-level actions of the one-electron observables.
namespace orbital_action {

inline OrbitalMap zero() { return OrbitalMap{}; }

inline OrbitalMap identity() {
  OrbitalMap m{};
  for (int i = 0; i < kNumSpinOrbitals; ++i) m[i][i] = GaussianRational(1);
  return m;
}

/// Spin component S_axis, axis in {1,2,3}.
inline OrbitalMap spin(int axis) {
  OrbitalMap m{};
  const Rational h = make_rational(1, 2);
  for (int s = 0; s < kNumSpatial; ++s) {
    int up = 2 * s, dn = 2 * s + 1;
    switch (axis) {
      case 1:
        m[dn][up] = GaussianRational(h);
        m[up][dn] = GaussianRational(h);
        break;
      case 2:
        m[dn][up] = GaussianRational(Rational(0), h);
        m[up][dn] = GaussianRational(Rational(0), -h);
        break;
      case 3:
        m[up][up] = GaussianRational(h);
        m[dn][dn] = GaussianRational(-h);
        break;
      default:
        throw std::invalid_argument("spin axis");
    }
  }
  return m;
}

/// Spatial index of the 2p orbital along axis j in {1,2,3}.
inline int p_spatial(int j) { return j == 3 ? 2 : j == 1 ? 3 : 4; }

/// Angular momentum component L_axis. L_{j+1} p_j = -i p_{j-1} and
/// L_{j-1} p_j = i p_{j+1} with axes mod 3; s orbitals are annihilated.
inline OrbitalMap angular(int axis) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("angular axis");
  OrbitalMap m{};
  auto wrap = [](int j) { return ((j - 1) % 3 + 3) % 3 + 1; };
  for (int j = 1; j <= 3; ++j) {
    int from = p_spatial(j);
    for (int spin = 0; spin < 2; ++spin) {
      if (wrap(j + 1) == axis)
        m[2 * p_spatial(wrap(j - 1)) + spin][2 * from + spin] = GaussianRational(Rational(0), Rational(-1));
      if (wrap(j - 1) == axis)
        m[2 * p_spatial(wrap(j + 1)) + spin][2 * from + spin] = GaussianRational(Rational(0), Rational(1));
    }
  }
  return m;
}

/// Number operator on the 2s orbital.
inline OrbitalMap two_s_number() {
  OrbitalMap m{};
  m[2][2] = GaussianRational(1);
  m[3][3] = GaussianRational(1);
  return m;
}

}  // namespace orbital_action

/// Inversion: (-1)^(number of occupied 2p orbitals) on each determinant.
inline DeterminantExpansion apply_parity(const DeterminantExpansion& x) {
  DeterminantExpansion out;
  for (const auto& [d, c] : x.terms()) out.add(d, c * GaussianRational(d.parity()));
  return out;
}

}  // namespace ptatom
