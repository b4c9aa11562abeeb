// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptatom/ptatom.hpp"

#include <gtest/gtest.h>

#include <map>
#include <optional>
#include <tuple>

using namespace ptatom;

namespace {

SlaterDeterminant det(std::vector<int> idx) { return SlaterDeterminant::from_orbitals(idx); }

// Determinant written in an arbitrary orbital order, as a signed canonical one.
DeterminantExpansion ordered(const std::vector<int>& idx) {
  SignedDeterminant cur{SlaterDeterminant(), 1};
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    auto c = create(cur.det, SpinOrbital(*it));
    cur = {c->det, cur.sign * c->sign};
  }
  return GaussianRational(cur.sign) * DeterminantExpansion(cur.det);
}

// Independent term inventory: peel (M_L, M_S) tables using an m-basis for the
// p shell. Returns count of each (L, 2S, parity) term.
std::map<std::tuple<int, int, int>, int> lsp_inventory(int N) {
  // Spin-orbitals as (m_l, 2 m_s, is_p); 1s and 2s have m_l = 0.
  struct SO {
    int ml, ms2, p;
  };
  std::vector<SO> so;
  for (int s = 0; s < 2; ++s)
    for (int sp : {1, -1}) so.push_back({0, sp, 0});
  for (int m : {-1, 0, 1})
    for (int sp : {1, -1}) so.push_back({m, sp, 1});
  std::map<std::tuple<int, int, int>, int> table;  // (ML, 2MS, parity) -> count
  for (unsigned b = 0; b < 1024; ++b) {
    if (std::popcount(b) != N) continue;
    if (N >= 3 && (b & 3u) != 3u) continue;
    if (N <= 2 && (b & ~3u)) continue;
    int ml = 0, ms = 0, np = 0;
    for (int i = 0; i < 10; ++i)
      if (b >> i & 1u) {
        ml += so[i].ml;
        ms += so[i].ms2;
        np += so[i].p;
      }
    table[{ml, ms, np % 2 ? -1 : 1}]++;
  }
  std::map<std::tuple<int, int, int>, int> terms;
  for (int p : {1, -1}) {
    for (;;) {
      // Largest (M_L, M_S) with a positive count starts a new term.
      std::optional<std::pair<int, int>> top;
      for (const auto& [k, v] : table)
        if (v > 0 && std::get<2>(k) == p) {
          std::pair<int, int> cand{std::get<0>(k), std::get<1>(k)};
          if (!top || cand > *top) top = cand;
        }
      if (!top) break;
      auto [L, S2] = *top;
      terms[{L, S2, p}]++;
      for (int ml = -L; ml <= L; ++ml)
        for (int ms = -S2; ms <= S2; ms += 2) table[{ml, ms, p}]--;
    }
  }
  return terms;
}

Matrix<GaussianRational> m_of(Observable o, int N) { return assemble_operator(o, N).entries; }

}  // namespace

TEST(GroundSpace, DimensionsMatchReferenceTable) {
  const std::vector<std::size_t> dims = {2, 1, 8, 28, 56, 70, 56, 28, 8, 1};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(ground_space_basis(n).size(), dims[n - 1]) << "N = " << n;
  for (int n = 3; n <= 10; ++n)
    for (auto d : ground_space_basis(n)) EXPECT_TRUE(d.has_core());
}

TEST(Operators, NeonIsOneByOne) {
  for (auto o : {Observable::kL2, Observable::kS2, Observable::kL3, Observable::kS3}) {
    auto m = assemble_operator(o, 10);
    ASSERT_EQ(m.dim(), 1u);
    EXPECT_EQ(m.entries(0, 0), GaussianRational(0));
  }
  EXPECT_EQ(assemble_operator(Observable::kParity, 10).entries(0, 0), GaussianRational(1));
}

TEST(Operators, LithiumSpinSquared) {
  auto m = assemble_on(Observable::kS2, {det({0, 1, 2})});
  EXPECT_EQ(m.entries(0, 0), GaussianRational(make_rational(3, 4)));
}

TEST(Operators, ThreeOrbitalLSquaredBlock) {
  // Valence |p_i p̄_i s p_j> and |p_k p̄_k s p_j>, spins up except the paired ones.
  // i = 1 (index 6), j = 2 (index 8), k = 3 (index 4), s = 2s (index 2), all with the 1s core.
  auto a = ordered({0, 1, 6, 7, 2, 8});
  auto b = ordered({0, 1, 4, 5, 2, 8});
  auto la = apply_observable(Observable::kL2, a);
  auto lb = apply_observable(Observable::kL2, b);
  EXPECT_EQ(a.inner(la), GaussianRational(4));
  EXPECT_EQ(b.inner(lb), GaussianRational(4));
  EXPECT_EQ(a.inner(lb), GaussianRational(-2));
  EXPECT_EQ(b.inner(la), GaussianRational(-2));
  // The pair spans an invariant subspace.
  EXPECT_EQ(la, GaussianRational(4) * a - GaussianRational(2) * b);
  EXPECT_EQ(apply_observable(Observable::kS2, a), GaussianRational(2) * a);
}

TEST(Operators, Hermitian) {
  for (int n : {3, 4, 6}) {
    for (auto o : {Observable::kL2, Observable::kS2, Observable::kL3, Observable::kS3}) {
      auto m = m_of(o, n);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), m(j, i).conj());
    }
    // L^2 and S^2 are real with integer entries.
    for (auto o : {Observable::kL2, Observable::kS2}) {
      auto m = m_of(o, n);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_TRUE(m(i, j).is_real());
    }
  }
}

TEST(Operators, Commutators) {
  for (int n = 1; n <= 10; ++n) {
    auto L2 = m_of(Observable::kL2, n), S2 = m_of(Observable::kS2, n), L3 = m_of(Observable::kL3, n),
         S3 = m_of(Observable::kS3, n), R = m_of(Observable::kParity, n);
    EXPECT_TRUE(commutator(L2, S2).is_zero()) << n;
    EXPECT_TRUE(commutator(L2, L3).is_zero()) << n;
    EXPECT_TRUE(commutator(S2, S3).is_zero()) << n;
    EXPECT_TRUE(commutator(L2, R).is_zero()) << n;
    EXPECT_TRUE(commutator(S2, L3).is_zero()) << n;
  }
}

TEST(EliminateCore, MatchesFullAssembly) {
  EXPECT_EQ(eliminate_core(3).valence.size(), 8u);
  EXPECT_EQ(eliminate_core(6).valence.size(), 70u);
  for (int n : {3, 5, 7}) {
    auto core = eliminate_core(n);
    for (auto o : {Observable::kL2, Observable::kS2, Observable::kL3, Observable::kParity}) {
      auto full = assemble_operator(o, n);
      auto red = core.assemble(o);
      ASSERT_EQ(red.basis, full.basis);
      EXPECT_TRUE(red.entries == full.entries) << observable_name(o) << " N = " << n;
    }
  }
}

TEST(Sectors, EigenEquationsHold) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& sec : simultaneous_eigenspaces(n)) {
      const Rational l2(sec.L * (sec.L + 1)), s2 = make_rational(sec.twice_S * (sec.twice_S + 2), 4);
      for (const auto& v : sec.basis) {
        EXPECT_EQ(apply_observable(Observable::kL2, v), GaussianRational(l2) * v);
        EXPECT_EQ(apply_observable(Observable::kS2, v), GaussianRational(s2) * v);
        EXPECT_EQ(apply_observable(Observable::kS3, v), GaussianRational(make_rational(sec.twice_MS, 2)) * v);
        EXPECT_EQ(apply_observable(Observable::kParity, v), GaussianRational(sec.parity) * v);
      }
      for (const auto& v : sec.l3zero_basis) EXPECT_TRUE(apply_observable(Observable::kL3, v).is_zero());
      EXPECT_EQ(sec.norm2.size(), sec.basis.size());
    }
}

TEST(Sectors, DimensionsSumToGroundSpace) {
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (const auto& sec : simultaneous_eigenspaces(n)) total += sec.dim();
    EXPECT_EQ(total, ground_space_basis(n).size());
  }
}

TEST(Sectors, L3KernelAtMostTwo) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& sec : simultaneous_eigenspaces(n)) {
      EXPECT_LE(sec.l3zero_basis.size(), 2u);
      EXPECT_GE(sec.l3zero_basis.size(), 1u);
    }
}

TEST(Sectors, InventoryMatchesIndependentTermCount) {
  for (int n = 1; n <= 10; ++n) {
    auto expected = lsp_inventory(n);
    std::map<std::tuple<int, int, int>, int> got;
    for (const auto& sec : simultaneous_eigenspaces(n)) {
      if (sec.twice_MS != sec.twice_S) continue;
      ASSERT_EQ(sec.dim() % static_cast<std::size_t>(2 * sec.L + 1), 0u);
      got[{sec.L, sec.twice_S, sec.parity}] += static_cast<int>(sec.dim()) / (2 * sec.L + 1);
    }
    EXPECT_EQ(got, expected) << "N = " << n;
  }
}

TEST(Sectors, ReferenceExamples) {
  auto find = [](int n, int L, int twice_S, int parity, int twice_ms) -> const SymmetrySector* {
    static std::map<int, std::vector<SymmetrySector>> cache;
    if (!cache.count(n)) cache[n] = simultaneous_eigenspaces(n);
    for (const auto& s : cache[n])
      if (s.L == L && s.twice_S == twice_S && s.parity == parity && s.twice_MS == twice_ms) return &s;
    return nullptr;
  };
  auto c1s = find(6, 0, 0, 1, 0);
  ASSERT_TRUE(c1s);
  EXPECT_EQ(c1s->l3zero_basis.size(), 2u);
  int n4s = 0;
  for (int ms : {3, 1, -1, -3}) {
    auto s = find(7, 0, 3, -1, ms);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->dim(), 1u);
    ++n4s;
  }
  EXPECT_EQ(n4s, 4);
  // The nitrogen quartet with maximal M_S is the single determinant |1 1̄ 2 2̄ 3 4 5>.
  auto top = find(7, 0, 3, -1, 3);
  ASSERT_EQ(top->basis[0].size(), 1u);
  EXPECT_EQ(top->basis[0].terms().begin()->first, det({0, 1, 2, 3, 4, 6, 8}));
}

TEST(Sectors, EvenOrbitalDifferenceInL3Kernels) {
  for (int n = 3; n <= 10; ++n)
    for (const auto& sec : simultaneous_eigenspaces(n)) {
      std::vector<SlaterDeterminant> dets;
      for (const auto& v : sec.l3zero_basis)
        for (const auto& [d, c] : v.terms()) dets.push_back(d);
      for (auto a : dets)
        for (auto b : dets) {
          // Differing in k orbitals means a symmetric difference of 2k bits.
          const int diff = std::popcount(static_cast<unsigned>(a.bits() ^ b.bits())) / 2;
          EXPECT_EQ(diff % 2, 0) << a.to_string() << " vs " << b.to_string();
        }
    }
}

TEST(Sectors, DualityMapsSectors) {
  for (int n = 3; n <= 10; ++n) {
    auto target = simultaneous_eigenspaces(12 - n);
    for (const auto& sec : simultaneous_eigenspaces(n)) {
      for (const auto& v : sec.basis) {
        auto w = dual(v);
        // w must be an eigenvector with the same (L, S, parity) and negated M_S.
        const Rational l2(sec.L * (sec.L + 1)), s2 = make_rational(sec.twice_S * (sec.twice_S + 2), 4);
        EXPECT_EQ(apply_observable(Observable::kL2, w), GaussianRational(l2) * w);
        EXPECT_EQ(apply_observable(Observable::kS2, w), GaussianRational(s2) * w);
        EXPECT_EQ(apply_observable(Observable::kS3, w), GaussianRational(make_rational(-sec.twice_MS, 2)) * w);
        EXPECT_EQ(apply_observable(Observable::kParity, w), GaussianRational(sec.parity) * w);
      }
      bool exists = false;
      for (const auto& t : target)
        if (t.L == sec.L && t.twice_S == sec.twice_S && t.parity == sec.parity && t.twice_MS == -sec.twice_MS &&
            t.dim() == sec.dim())
          exists = true;
      EXPECT_TRUE(exists) << "N = " << n << " " << sec.term().to_string();
    }
  }
}

TEST(Sectors, LValuesInventoryForBeryllium) {
  // L^2 eigenvalues on V0(4) with multiplicities from the term list 1S, 1S, 3P°, 1P°, 3P, 1D.
  std::map<int, std::size_t> mult;
  for (const auto& sec : simultaneous_eigenspaces(4)) mult[sec.L * (sec.L + 1)] += sec.dim();
  std::map<int, std::size_t> expected = {{0, 2}, {2, 9 + 3 + 9}, {6, 5}};
  EXPECT_EQ(mult, expected);
}

TEST(RepresentativeStates, PhaseAndNormalization) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& ts : representative_states(n)) {
      ASSERT_LE(ts.states.size(), 2u);
      for (std::size_t i = 0; i < ts.states.size(); ++i) {
        const auto& v = ts.states[i];
        EXPECT_TRUE(v.is_real());
        EXPECT_EQ(v.norm2(), ts.norm2[i]);
        // Integer coefficients, largest magnitude positive (first on ties).
        Rational best = 0;
        Rational lead = 0;
        for (const auto& [d, c] : v.terms()) {
          EXPECT_EQ(denominator_of(c.re), 1);
          if (abs(c.re) > best) {
            best = abs(c.re);
            lead = c.re;
          }
        }
        EXPECT_GT(lead, 0);
        EXPECT_EQ(apply_observable(Observable::kL3, v).is_zero(), true);
        EXPECT_EQ(apply_observable(Observable::kS3, v),
                  GaussianRational(make_rational(ts.term.twice_S, 2)) * v);
      }
      if (ts.states.size() == 2) {
        EXPECT_EQ(ts.states[0].inner(ts.states[1]), GaussianRational(0));
        EXPECT_GT(ts.two_s_count[0], ts.two_s_count[1]);
      }
    }
}

TEST(TermSymbol, Formatting) {
  EXPECT_EQ(term_symbol(0, 3, -1).to_string(), "⁴S°");
  EXPECT_EQ(term_symbol(1, 2, 1).to_string(), "³P");
  EXPECT_EQ(term_symbol(2, 1, 1).to_string(), "²D");
  EXPECT_EQ(term_symbol(3, 0, -1).ascii(), "1Fo");
  EXPECT_EQ(term_symbol(1, 2, 1).degeneracy(), 9);
  EXPECT_THROW(term_symbol(4, 0, 1), std::out_of_range);
}

TEST(TermSymbol, Parsing) {
  for (int L = 0; L <= 3; ++L)
    for (int s = 0; s <= 4; ++s)
      for (int p : {1, -1}) {
        auto t = term_symbol(L, s, p);
        EXPECT_EQ(TermSymbol::parse(t.to_string()), t);
        EXPECT_EQ(TermSymbol::parse(t.ascii()), t);
      }
  EXPECT_EQ(TermSymbol::parse("2P^o"), term_symbol(1, 1, -1));
  EXPECT_FALSE(TermSymbol::parse("P"));
  EXPECT_FALSE(TermSymbol::parse("2Q"));
  EXPECT_FALSE(TermSymbol::parse("2Px"));
}
