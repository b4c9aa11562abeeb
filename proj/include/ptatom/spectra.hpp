// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectra.hpp
 * @brief Closed-form spectra of the sector blocks, level lists, ground-state
 *        and gap reports, and comparison with reference data.
 */

#pragma once

#include "ptatom/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptatom {

/// Eigenpair of a 1x1 or 2x2 block. The eigenvector is (1, c) in the
/// block's state order; c is absent for 1x1 blocks and diagonal 2x2 blocks.
struct Eigenpair {
  QuadraticSurd value;
  std::optional<ScaledSurd> c;
  std::size_t pure_index = 0;  // which state, when c is absent
};

/// Generic symmetric block with rational diagonal and a cross entry
/// cross_coef * sqrt(cross_root).
struct RealBlock {
  std::vector<Rational> diag;
  Rational cross_coef{0};
  Integer cross_root{1};
};

inline std::vector<Eigenpair> diagonalize_block(const RealBlock& b) {
  if (b.diag.size() == 1) return {Eigenpair{QuadraticSurd(b.diag[0]), std::nullopt, 0}};
  if (b.diag.size() != 2) throw std::invalid_argument("block dimension must be 1 or 2");
  const Rational& e1 = b.diag[0];
  const Rational& e2 = b.diag[1];
  if (b.cross_coef == 0) {
    std::vector<Eigenpair> out = {{QuadraticSurd(e1), std::nullopt, 0}, {QuadraticSurd(e2), std::nullopt, 1}};
    if (e2 < e1) std::swap(out[0], out[1]);
    return out;
  }
  const Rational half_diff = (e1 - e2) / 2;
  const Rational disc = half_diff * half_diff + b.cross_coef * b.cross_coef * Rational(b.cross_root);
  const QuadraticSurd root = QuadraticSurd::sqrt_of(disc);
  const QuadraticSurd mean((e1 + e2) / 2);
  // c = ((e2 - e1)/2 +- sqrt(disc)) / (r sqrt(m)) = sqrt(m) ((e2 - e1)/2 +- sqrt(disc)) / (r m)
  auto [s, m] = squarefree_split(b.cross_root);
  const Rational scale = Rational(1) / (b.cross_coef * Rational(s) * Rational(m));
  std::vector<Eigenpair> out;
  for (int sgn : {-1, 1}) {
    QuadraticSurd pm = sgn < 0 ? -root : root;
    QuadraticSurd c = (QuadraticSurd(-half_diff) + pm) * QuadraticSurd(scale);
    out.push_back({mean + pm, ScaledSurd{m, c}, 0});
  }
  return out;
}

inline RealBlock vee_block_at_unit_charge(const SectorBlock& b) {
  RealBlock r;
  for (const auto& e : b.diag) r.diag.push_back(e.evaluate());
  if (b.dim() == 2) {
    r.cross_coef = b.cross.evaluate();
    r.cross_root = b.cross_root;
  }
  return r;
}

inline RealBlock to_real_block(const PhpBlock& p) { return RealBlock{p.diag, p.cross_coef, p.cross_root}; }

/// Normalized state as text, e.g. "1/sqrt(3)(|1 1̄ 3 3̄⟩ + |1 1̄ 4 4̄⟩)".
inline std::string render_state(const DeterminantExpansion& x, const Rational& norm2) {
  std::string body;
  bool first = true;
  for (const auto& [d, c] : x.terms()) {
    if (!c.is_real()) throw std::logic_error("render_state expects real coefficients");
    Rational mag = abs(c.re);
    std::string coef = mag == 1 ? "" : to_string(mag);
    if (first) body += (c.re < 0 ? "-" : "") + coef + d.to_string();
    else body += (c.re < 0 ? " - " : " + ") + coef + d.to_string();
    first = false;
  }
  if (norm2 == 1) return body;
  auto exact = exact_sqrt(norm2);
  std::string pre = exact ? "1/" + to_string(*exact) : "1/sqrt(" + to_string(norm2) + ")";
  return pre + "(" + body + ")";
}

struct EnergyLevel {
  TermSymbol term;
  Rational z2;        // coefficient of Z^2
  QuadraticSurd z1;   // coefficient of Z
  int degeneracy = 0;
  std::optional<ScaledSurd> c;
  std::string eigenvector;
  std::size_t block_dim = 1;

  QuadraticSurd energy(const Rational& Z) const { return QuadraticSurd(z2 * Z * Z) + z1 * QuadraticSurd(Z); }
  double energy_double(const Rational& Z) const { return energy(Z).to_double(); }
  std::string closed_form() const {
    return to_string(z2) + "*Z^2 + (" + z1.to_string() + ")*Z";
  }
};

namespace detail {

inline std::vector<EnergyLevel> unsorted_levels(int N) {
  std::vector<EnergyLevel> out;
  for (const auto& b : sector_blocks(N)) {
    auto pairs = diagonalize_block(vee_block_at_unit_charge(b));
    for (const auto& p : pairs) {
      EnergyLevel lv;
      lv.term = b.term;
      lv.z2 = h0_shift(N);
      lv.z1 = p.value;
      lv.degeneracy = b.term.degeneracy();
      lv.c = p.c;
      lv.block_dim = b.dim();
      if (p.c) {
        lv.eigenvector = "(Psi_a + c*Psi_b)/sqrt(1 + c^2), Psi_a = " + render_state(b.states[0], b.norm2[0]) +
                         ", Psi_b = " + render_state(b.states[1], b.norm2[1]);
      } else {
        lv.eigenvector = render_state(b.states[p.pure_index], b.norm2[p.pure_index]);
      }
      out.push_back(std::move(lv));
    }
  }
  return out;
}

}  // namespace detail

/// All PT levels for N electrons at charge Z, ascending by exact energy.
inline std::vector<EnergyLevel> level_list(int N, const Rational& Z) {
  if (Z <= 0) throw std::invalid_argument("Z must be positive");
  auto levels = detail::unsorted_levels(N);
  std::stable_sort(levels.begin(), levels.end(), [&](const EnergyLevel& a, const EnergyLevel& b) {
    int c = compare(a.energy(Z), b.energy(Z));
    if (c != 0) return c < 0;
    return a.term.ascii() < b.term.ascii();
  });
  return levels;
}

struct GroundStateReport {
  int N = 0;
  TermSymbol term;
  int degeneracy = 0;
  std::string eigenvector;
  std::optional<ScaledSurd> c;
  EnergyLevel level;
};

inline GroundStateReport ground_state_report(int N) {
  auto levels = level_list(N, Rational(N));
  const auto& g = levels.front();
  return GroundStateReport{N, g.term, g.degeneracy, g.eigenvector, g.c, g};
}

struct GapPoint {
  Rational Z;
  TermSymbol term;
  std::size_t index = 0;  // position in the level list
  double reduced_gap;  // (E_j - E_1) / Z^2; ground and excited radicands differ in general
};

/// Reduced gaps (E_j - E_1)/Z^2 for every level j at each Z.
inline std::vector<GapPoint> gap_curves(int N, const std::vector<Rational>& Zs) {
  std::vector<GapPoint> out;
  for (const auto& Z : Zs) {
    auto levels = level_list(N, Z);
    for (std::size_t j = 0; j < levels.size(); ++j) {
      const double gap = (levels[j].z1.to_double() - levels[0].z1.to_double()) / to_double(Z);
      out.push_back({Z, levels[j].term, j, gap});
    }
  }
  return out;
}

struct HundReport {
  std::string symbolic;        // e.g. "(24|42) - 3(34|43)"
  Rational symbolic_value;     // coefficient of Z from the symbolic route
  Rational level_value;        // coefficient of Z from level subtraction
  bool paths_agree = false;
  int sign = 0;
  Rational literal_target;     // value stated as 16/729 - 81/2560
  bool matches_literal = false;
  std::string aufbau_symbolic; // same difference for single aufbau determinants
};

/// E(3S°) - E(1D°) for the carbon sequence, by two independent routes.
inline HundReport hund_counterexample_report() {
  const int N = 6;
  const TermSymbol triplet{0, 2, -1}, singlet{2, 0, -1};
  const SectorBlock *bt = nullptr, *bs = nullptr;
  for (const auto& b : sector_blocks(N)) {
    if (b.term == triplet) bt = &b;
    if (b.term == singlet) bs = &b;
  }
  if (!bt || !bs || bt->dim() != 1 || bs->dim() != 1) throw std::logic_error("carbon 3S°/1D° blocks missing");
  SymbolicElement diff = bt->diag[0] - bs->diag[0];
  const std::map<IntegralSymbol, std::string> alias = {{IntegralSymbol{{2, 3, 2, 3}}, "(24|42)"}};
  HundReport r;
  r.symbolic = diff.to_string(alias);
  r.symbolic_value = diff.evaluate();
  auto levels = level_list(N, Rational(1));
  std::optional<QuadraticSurd> et, es;
  for (const auto& lv : levels) {
    if (lv.term == triplet && !et) et = lv.z1;
    if (lv.term == singlet && !es) es = lv.z1;
  }
  QuadraticSurd d = *et - *es;
  if (!d.is_rational()) throw std::logic_error("hund difference is not rational");
  r.level_value = d.a();
  r.paths_agree = r.level_value == r.symbolic_value;
  r.sign = r.symbolic_value.sign();
  r.literal_target = make_rational(16, 729) - make_rational(81, 2560);
  r.matches_literal = r.symbolic_value == r.literal_target;
  auto a_t = SlaterDeterminant::from_orbitals({0, 1, 2, 4, 6, 9});
  auto a_s = SlaterDeterminant::from_orbitals({0, 1, 2, 4, 7, 9});
  r.aufbau_symbolic = (slater_condon(a_t, a_t) - slater_condon(a_s, a_s)).to_string(alias);
  return r;
}

struct DataFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentRecord {
  int N = 0;
  Rational Z;
  TermSymbol term;
  double energy = 0;
  std::string energy_text;
  std::string source;
};

/// Parses "N,Z,term,energy_hartree,source"; lines starting with '#' and
/// blank lines are skipped. Throws DataFileError with the line number.
inline std::vector<ExperimentRecord> parse_experiment_csv(std::istream& in) {
  std::vector<ExperimentRecord> out;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw DataFileError("line " + std::to_string(lineno) + ": " + what);
    };
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!header) {
      if (line != "N,Z,term,energy_hartree,source") fail("expected header N,Z,term,energy_hartree,source");
      header = true;
      continue;
    }
    if (f.size() < 5) fail("expected 5 fields");
    for (std::size_t k = 5; k < f.size(); ++k) f[4] += "," + f[k];
    ExperimentRecord r;
    auto n = parse_rational(f[0]);
    if (!n || denominator_of(*n) != 1 || *n < 1 || *n > 10) fail("bad N '" + f[0] + "'");
    r.N = static_cast<int>(numerator_of(*n));
    auto z = parse_rational(f[1]);
    if (!z || *z <= 0) fail("bad Z '" + f[1] + "'");
    r.Z = *z;
    auto t = TermSymbol::parse(f[2]);
    if (!t) fail("bad term '" + f[2] + "'");
    r.term = *t;
    auto e = parse_rational(f[3]);
    if (!e) fail("bad energy '" + f[3] + "'");
    r.energy = to_double(*e);
    r.energy_text = f[3];
    r.source = f[4];
    if (r.source.empty()) fail("source is mandatory");
    out.push_back(std::move(r));
  }
  if (!header) throw DataFileError("missing header");
  return out;
}

inline std::vector<ExperimentRecord> load_experiment_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFileError("cannot open " + path);
  return parse_experiment_csv(in);
}

struct ComparisonRow {
  TermSymbol term;
  std::size_t occurrence = 0;  // k-th level of this term, from 0
  QuadraticSurd e_pt;
  std::optional<double> e_exp;
  std::optional<double> relative_error_percent;
};

struct OrderingFlag {
  TermSymbol lower_pt;   // lower in PT
  TermSymbol higher_pt;  // higher in PT, but lower in experiment
};

struct ComparisonReport {
  int N = 0;
  Rational Z;
  std::vector<ComparisonRow> rows;
  std::vector<OrderingFlag> inversions;
  std::vector<std::string> unmatched_records;
};

/// Joins the PT levels with reference records of the same (N, Z) by term;
/// the k-th record of a term is matched to the k-th PT level of that term.
inline ComparisonReport compare_experiment(const std::vector<ExperimentRecord>& records, int N, const Rational& Z) {
  ComparisonReport rep{N, Z, {}, {}, {}};
  auto levels = level_list(N, Z);
  std::vector<const ExperimentRecord*> mine;
  for (const auto& r : records)
    if (r.N == N && r.Z == Z) mine.push_back(&r);
  std::map<TermSymbol, std::vector<const ExperimentRecord*>> by_term;
  for (auto* r : mine) by_term[r->term].push_back(r);
  for (auto& [t, v] : by_term)
    std::stable_sort(v.begin(), v.end(), [](auto* a, auto* b) { return a->energy < b->energy; });
  std::map<TermSymbol, std::size_t> seen;
  for (const auto& lv : levels) {
    ComparisonRow row{lv.term, seen[lv.term]++, lv.energy(Z), std::nullopt, std::nullopt};
    auto it = by_term.find(lv.term);
    if (it != by_term.end() && row.occurrence < it->second.size()) {
      double e = it->second[row.occurrence]->energy;
      row.e_exp = e;
      row.relative_error_percent = std::abs(row.e_pt.to_double() - e) / std::abs(e) * 100.0;
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& [t, v] : by_term) {
    std::size_t have = seen.count(t) ? seen[t] : 0;
    for (std::size_t k = have; k < v.size(); ++k)
      rep.unmatched_records.push_back(t.to_string() + " " + v[k]->energy_text);
  }
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
      const auto &a = rep.rows[i], &b = rep.rows[j];
      if (a.e_exp && b.e_exp && *b.e_exp < *a.e_exp) rep.inversions.push_back({a.term, b.term});
    }
  return rep;
}

}  // namespace ptatom
