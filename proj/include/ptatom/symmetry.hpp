// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symmetry.hpp
 * @brief Operator matrices of L^2, S^2, L3, S3 and inversion on the
 *        non-interacting ground space V0(N), and its exact decomposition into
 *        joint eigenspaces.
 */

#pragma once

#include "ptatom/determinant.hpp"
#include "ptatom/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace ptatom {

/// Determinants spanning V0(N) in ascending bitset order. For N <= 2 only
/// the 1s orbitals are used; for N >= 3 both 1s orbitals are filled.
inline std::vector<SlaterDeterminant> ground_space_basis(int N) {
  if (N < 1 || N > 10) throw std::out_of_range("N must be in 1..10");
  std::vector<SlaterDeterminant> out;
  for (unsigned b = 0; b < (1u << kNumSpinOrbitals); ++b) {
    SlaterDeterminant d(static_cast<std::uint16_t>(b));
    if (d.count() != N) continue;
    if (N <= 2 ? (b & ~0x3u) != 0 : !d.has_core()) continue;
    out.push_back(d);
  }
  return out;
}

enum class Observable { kL2, kS2, kL3, kS3, kParity, kTwoSCount };

inline std::string observable_name(Observable o) {
  switch (o) {
    case Observable::kL2: return "L2";
    case Observable::kS2: return "S2";
    case Observable::kL3: return "L3";
    case Observable::kS3: return "S3";
    case Observable::kParity: return "R";
    case Observable::kTwoSCount: return "n2s";
  }
  return "?";
}

inline DeterminantExpansion apply_observable(Observable o, const DeterminantExpansion& x) {
  using namespace orbital_action;
  switch (o) {
    case Observable::kL2: {
      DeterminantExpansion acc;
      for (int a = 1; a <= 3; ++a) acc += apply_two_body_product(angular(a), x);
      return acc;
    }
    case Observable::kS2: {
      DeterminantExpansion acc;
      for (int a = 1; a <= 3; ++a) acc += apply_two_body_product(spin(a), x);
      return acc;
    }
    case Observable::kL3: return apply_one_body(angular(3), x);
    case Observable::kS3: return apply_one_body(spin(3), x);
    case Observable::kParity: return apply_parity(x);
    case Observable::kTwoSCount: return apply_one_body(two_s_number(), x);
  }
  throw std::invalid_argument("observable");
}

struct OperatorMatrix {
  std::vector<SlaterDeterminant> basis;
  Matrix<GaussianRational> entries;

  std::size_t dim() const { return basis.size(); }
};

/// Matrix of o on the span of the given determinants; throws if o leaves it.
inline OperatorMatrix assemble_on(Observable o, const std::vector<SlaterDeterminant>& basis) {
  std::map<SlaterDeterminant, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  OperatorMatrix m{basis, Matrix<GaussianRational>(basis.size(), basis.size())};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto image = apply_observable(o, DeterminantExpansion(basis[j]));
    for (const auto& [d, c] : image.terms()) {
      auto it = pos.find(d);
      if (it == pos.end()) throw std::logic_error("operator leaves the basis span");
      m.entries(it->second, j) = c;
    }
  }
  return m;
}

inline OperatorMatrix assemble_operator(Observable o, int N) { return assemble_on(o, ground_space_basis(N)); }

/// Valence-only view of V0(N) for N >= 3: the two 1s orbitals are dropped.
struct CoreReducedBasis {
  int N = 0;
  std::vector<SlaterDeterminant> valence;

  static SlaterDeterminant lift(SlaterDeterminant v) {
    return SlaterDeterminant(static_cast<std::uint16_t>(v.bits() | 0x3u));
  }
  std::vector<SlaterDeterminant> lifted() const {
    std::vector<SlaterDeterminant> out;
    for (auto v : valence) out.push_back(lift(v));
    return out;
  }
  /// Operator matrix computed on valence determinants. Row/column order
  /// matches the lifted basis.
  OperatorMatrix assemble(Observable o) const {
    auto m = assemble_on(o, valence);
    m.basis = lifted();
    return m;
  }
};

inline CoreReducedBasis eliminate_core(int N) {
  if (N < 3 || N > 10) throw std::out_of_range("eliminate_core needs N in 3..10");
  CoreReducedBasis r{N, {}};
  for (unsigned b = 0; b < (1u << kNumSpinOrbitals); ++b) {
    if (b & 0x3u) continue;
    SlaterDeterminant d(static_cast<std::uint16_t>(b));
    if (d.count() == N - 2) r.valence.push_back(d);
  }
  return r;
}

struct TermSymbol {
  int L = 0;
  int twice_S = 0;
  int parity = 1;

  int multiplicity() const { return twice_S + 1; }
  int degeneracy() const { return (2 * L + 1) * (twice_S + 1); }
  char letter() const {
    static const char kLetters[] = "SPDFGH";
    if (L < 0 || L > 5) throw std::out_of_range("L");
    return kLetters[L];
  }

  /// e.g. "⁴S°".
  std::string to_string() const {
    static const char* kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(multiplicity())) s += kSup[c - '0'];
    s += letter();
    if (parity < 0) s += "°";
    return s;
  }
  /// e.g. "4So".
  std::string ascii() const {
    return std::to_string(multiplicity()) + std::string(1, letter()) + (parity < 0 ? "o" : "");
  }

  /// Accepts the ASCII form ("4So", "2P^o", "3P") and the Unicode form.
  static std::optional<TermSymbol> parse(const std::string& text) {
    static const std::vector<std::pair<std::string, char>> kSup = {
        {"¹", '1'}, {"²", '2'}, {"³", '3'}, {"⁴", '4'}, {"⁵", '5'}, {"⁶", '6'}, {"⁷", '7'}, {"⁸", '8'}, {"⁹", '9'}};
    std::string t;
    for (std::size_t i = 0; i < text.size();) {
      bool hit = false;
      for (const auto& [sup, digit] : kSup)
        if (text.compare(i, sup.size(), sup) == 0) {
          t += digit;
          i += sup.size();
          hit = true;
          break;
        }
      if (hit) continue;
      if (text.compare(i, 2, "°") == 0) {
        t += 'o';
        i += 2;
        continue;
      }
      if (text[i] != '^' && text[i] != ' ') t += text[i];
      ++i;
    }
    std::size_t k = 0;
    while (k < t.size() && t[k] >= '0' && t[k] <= '9') ++k;
    if (k == 0 || k == t.size()) return std::nullopt;
    int mult = std::stoi(t.substr(0, k));
    static const std::string kLetters = "SPDFGH";
    auto L = kLetters.find(t[k]);
    if (L == std::string::npos || mult < 1) return std::nullopt;
    std::string rest = t.substr(k + 1);
    if (!rest.empty() && rest != "o") return std::nullopt;
    return TermSymbol{static_cast<int>(L), mult - 1, rest.empty() ? 1 : -1};
  }

  friend auto operator<=>(const TermSymbol&, const TermSymbol&) = default;
};

inline TermSymbol term_symbol(int L, int twice_S, int parity) {
  if (L < 0 || L > 3) throw std::out_of_range("L must be in 0..3");
  return TermSymbol{L, twice_S, parity};
}

struct SymmetrySector {
  int L = 0;
  int twice_S = 0;
  int twice_MS = 0;
  int parity = 1;
  std::vector<DeterminantExpansion> basis;
  std::vector<Rational> norm2;
  std::vector<DeterminantExpansion> l3zero_basis;

  TermSymbol term() const { return TermSymbol{L, twice_S, parity}; }
  std::size_t dim() const { return basis.size(); }
};

namespace detail {

/// Scales a real vector to coprime integers; complex vectors get a common
/// rational rescaling of both parts.
inline std::vector<GaussianRational> primitive(std::vector<GaussianRational> v) {
  Integer l = 1, g = 0;
  for (const auto& c : v) {
    for (const Rational* r : {&c.re, &c.im}) {
      if (*r == 0) continue;
      l = boost::multiprecision::lcm(l, denominator_of(*r));
    }
  }
  for (auto& c : v) {
    c.re *= Rational(l);
    c.im *= Rational(l);
    for (const Rational* r : {&c.re, &c.im})
      if (*r != 0) g = boost::multiprecision::gcd(g, numerator_of(*r));
  }
  if (g > 1)
    for (auto& c : v) {
      c.re /= Rational(g);
      c.im /= Rational(g);
    }
  return v;
}

/// Phase rule: the entry of largest modulus is positive real, ties resolved
/// by the earliest determinant.
inline DeterminantExpansion apply_phase_rule(DeterminantExpansion x) {
  const GaussianRational* best = nullptr;
  Rational best_n = -1;
  for (const auto& [d, c] : x.terms()) {
    Rational n = c.norm2();
    if (n > best_n) {
      best_n = n;
      best = &c;
    }
  }
  if (!best) return x;
  if (!best->is_real()) throw std::logic_error("phase rule needs a real leading entry");
  GaussianRational phase(best->re > 0 ? 1 : -1);
  x *= phase;
  return x;
}

inline DeterminantExpansion to_expansion(const std::vector<SlaterDeterminant>& dets,
                                         const std::vector<std::size_t>& idx,
                                         const std::vector<GaussianRational>& v) {
  DeterminantExpansion x;
  for (std::size_t k = 0; k < idx.size(); ++k) x.add(dets[idx[k]], v[k]);
  return x;
}

inline Matrix<GaussianRational> submatrix(const Matrix<GaussianRational>& m, const std::vector<std::size_t>& idx) {
  Matrix<GaussianRational> s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

inline Matrix<GaussianRational> shifted(Matrix<GaussianRational> m, const Rational& lambda) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= GaussianRational(lambda);
  return m;
}

/// Orthogonalizes vectors in order, keeping integer primitive coefficients.
inline std::vector<DeterminantExpansion> gram_schmidt(const std::vector<DeterminantExpansion>& in) {
  std::vector<DeterminantExpansion> out;
  for (auto v : in) {
    for (const auto& u : out) {
      GaussianRational f = u.inner(v) / GaussianRational(u.norm2());
      v -= f * u;
    }
    if (!v.is_zero()) out.push_back(v);
  }
  return out;
}

struct GroupData {
  std::vector<SlaterDeterminant> dets;
  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;  // (2M_S, parity)
  Matrix<GaussianRational> L2, S2, L3, n2s;
};

inline GroupData group_data(int N) {
  GroupData g;
  g.dets = ground_space_basis(N);
  g.L2 = assemble_on(Observable::kL2, g.dets).entries;
  g.S2 = assemble_on(Observable::kS2, g.dets).entries;
  g.L3 = assemble_on(Observable::kL3, g.dets).entries;
  g.n2s = assemble_on(Observable::kTwoSCount, g.dets).entries;
  for (std::size_t i = 0; i < g.dets.size(); ++i)
    g.groups[{g.dets[i].twice_ms(), g.dets[i].parity()}].push_back(i);
  return g;
}

inline std::vector<DeterminantExpansion> kernel_vectors(const Matrix<GaussianRational>& stacked,
                                                        const std::vector<SlaterDeterminant>& dets,
                                                        const std::vector<std::size_t>& idx) {
  std::vector<DeterminantExpansion> out;
  for (auto& v : nullspace(stacked)) out.push_back(apply_phase_rule(to_expansion(dets, idx, primitive(v))));
  return out;
}

}  // namespace detail

/// Joint eigenspaces of (L^2, S^2, S3, parity) on V0(N), each with the kernel
/// of L3 inside it. Throws if the candidate spectra do not exhaust V0(N).
inline std::vector<SymmetrySector> simultaneous_eigenspaces(int N) {
  auto g = detail::group_data(N);
  std::vector<SymmetrySector> out;
  std::size_t total = 0;
  for (const auto& [key, idx] : g.groups) {
    auto [twice_ms, parity] = key;
    auto L2 = detail::submatrix(g.L2, idx);
    auto S2 = detail::submatrix(g.S2, idx);
    auto L3 = detail::submatrix(g.L3, idx);
    std::size_t found = 0;
    for (int twice_S = std::abs(twice_ms); twice_S <= N; twice_S += 2) {
      Rational s_eig = make_rational(twice_S * (twice_S + 2), 4);
      auto s_block = detail::shifted(S2, s_eig);
      for (int L = 0; L <= 3; ++L) {
        auto ls = s_block.stacked(detail::shifted(L2, Rational(L * (L + 1))));
        auto basis = detail::kernel_vectors(ls, g.dets, idx);
        if (basis.empty()) continue;
        SymmetrySector sec;
        sec.L = L;
        sec.twice_S = twice_S;
        sec.twice_MS = twice_ms;
        sec.parity = parity;
        sec.basis = std::move(basis);
        for (const auto& v : sec.basis) sec.norm2.push_back(v.norm2());
        sec.l3zero_basis = detail::kernel_vectors(ls.stacked(L3), g.dets, idx);
        found += sec.basis.size();
        out.push_back(std::move(sec));
      }
    }
    if (found != idx.size())
      throw std::logic_error("candidate eigenvalues do not exhaust the (M_S, parity) block");
    total += found;
  }
  if (total != g.dets.size()) throw std::logic_error("sector dimensions do not sum to dim V0(N)");
  std::sort(out.begin(), out.end(), [](const SymmetrySector& a, const SymmetrySector& b) {
    return std::tuple(a.L, a.twice_S, -a.parity, -a.twice_MS) < std::tuple(b.L, b.twice_S, -b.parity, -b.twice_MS);
  });
  return out;
}

/// Representative states of one term: M_S = S, L3 = 0, split by the number
/// of 2s electrons (2s^2 first). Coefficients are coprime integers.
struct TermStates {
  TermSymbol term;
  std::vector<DeterminantExpansion> states;
  std::vector<Rational> norm2;
  std::vector<int> two_s_count;
};

inline std::vector<TermStates> representative_states(int N) {
  auto g = detail::group_data(N);
  std::vector<TermStates> out;
  for (const auto& [key, idx] : g.groups) {
    auto [twice_ms, parity] = key;
    if (twice_ms < 0) continue;
    auto L2 = detail::submatrix(g.L2, idx);
    auto S2 = detail::submatrix(g.S2, idx);
    auto L3 = detail::submatrix(g.L3, idx);
    auto n2s = detail::submatrix(g.n2s, idx);
    const int twice_S = twice_ms;
    Rational s_eig = make_rational(twice_S * (twice_S + 2), 4);
    auto s_block = detail::shifted(S2, s_eig);
    for (int L = 0; L <= 3; ++L) {
      auto stack = s_block.stacked(detail::shifted(L2, Rational(L * (L + 1)))).stacked(L3);
      auto whole = nullspace(stack);
      if (whole.empty()) continue;
      TermStates ts{TermSymbol{L, twice_S, parity}, {}, {}, {}};
      for (int nu = 2; nu >= 0; --nu) {
        auto piece = detail::kernel_vectors(stack.stacked(detail::shifted(n2s, Rational(nu))), g.dets, idx);
        if (piece.size() > 1) piece = detail::gram_schmidt(piece);
        for (auto& v : piece) {
          ts.norm2.push_back(v.norm2());
          ts.states.push_back(std::move(v));
          ts.two_s_count.push_back(nu);
        }
      }
      if (ts.states.size() != whole.size())
        throw std::logic_error("2s-occupation split does not cover the L3 kernel");
      out.push_back(std::move(ts));
    }
  }
  std::sort(out.begin(), out.end(), [](const TermStates& a, const TermStates& b) {
    return std::tuple(a.term.L, a.term.twice_S, -a.term.parity) < std::tuple(b.term.L, b.term.twice_S, -b.term.parity);
  });
  return out;
}

}  // namespace ptatom
