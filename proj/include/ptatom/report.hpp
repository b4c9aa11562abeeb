// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief Report documents and their table, CSV and JSON renderings.
 */

#pragma once

#include "ptatom/spectra.hpp"

#include "json.hpp"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace ptatom {

enum class Format { kTable, kCsv, kJson };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "table") return Format::kTable;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  return std::nullopt;
}

/// Fixed four decimals.
inline std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct Section {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::string title;
  std::vector<Section> sections;
};

namespace detail {

/// Terminal columns of a UTF-8 string; combining marks take none.
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if ((c & 0xC0) == 0x80) continue;
    if (c == 0xCC && i + 1 < s.size()) {
      const auto n = static_cast<unsigned char>(s[i + 1]);
      if (n >= 0x80 && n <= 0xAF) continue;  // U+0300..U+032F
    }
    ++w;
  }
  return w;
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace detail

inline std::string render_table(const Report& r) {
  std::string out;
  if (!r.title.empty()) out += r.title + "\n";
  for (const auto& s : r.sections) {
    if (!out.empty()) out += "\n";
    if (r.sections.size() > 1) out += "[" + s.name + "]\n";
    std::vector<std::size_t> w(s.header.size());
    for (std::size_t k = 0; k < s.header.size(); ++k) w[k] = detail::display_width(s.header[k]);
    for (const auto& row : s.rows)
      for (std::size_t k = 0; k < row.size() && k < w.size(); ++k)
        w[k] = std::max(w[k], detail::display_width(row[k]));
    auto line = [&](const std::vector<std::string>& cells) {
      std::string l;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        l += cells[k];
        if (k + 1 < cells.size()) l += std::string(w[k] - detail::display_width(cells[k]) + 2, ' ');
      }
      out += l + "\n";
    };
    line(s.header);
    std::size_t total = 0;
    for (auto x : w) total += x + 2;
    out += std::string(total > 2 ? total - 2 : 0, '-') + "\n";
    for (const auto& row : s.rows) line(row);
  }
  return out;
}

inline std::string render_csv(const Report& r) {
  std::string out;
  for (const auto& s : r.sections) {
    if (r.sections.size() > 1) out += (out.empty() ? "" : "\n") + std::string("# ") + s.name + "\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + detail::csv_cell(cells[k]);
      out += "\n";
    };
    line(s.header);
    for (const auto& row : s.rows) line(row);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["title"] = r.title;
  nlohmann::ordered_json secs = nlohmann::ordered_json::object();
  for (const auto& s : r.sections) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : s.rows) {
      nlohmann::ordered_json o;
      for (std::size_t k = 0; k < s.header.size(); ++k) o[s.header[k]] = k < row.size() ? row[k] : "";
      rows.push_back(std::move(o));
    }
    secs[s.name] = std::move(rows);
  }
  j["sections"] = std::move(secs);
  return j;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::kTable: return render_table(r);
    case Format::kCsv: return render_csv(r);
    case Format::kJson: return render_json(r);
  }
  return {};
}

// Report builders.

inline std::string z_string(const Rational& Z) { return to_string(Z); }

inline Report levels_report(int N, const Rational& Z) {
  Report r{"levels", "N = " + std::to_string(N) + ", Z = " + z_string(Z), {}};
  Section s{"levels", {"term", "degeneracy", "energy_closed_form", "energy_exact", "c", "energy"}, {}};
  for (const auto& lv : level_list(N, Z)) {
    s.rows.push_back({lv.term.to_string(), std::to_string(lv.degeneracy), lv.closed_form(),
                      lv.energy(Z).to_string(), lv.c ? lv.c->to_string() : "", fixed4(lv.energy_double(Z))});
  }
  r.sections.push_back(std::move(s));
  return r;
}

inline Report ground_state_summary(int N) {
  auto g = ground_state_report(N);
  const Rational Z(N);
  Report r{"ground-state", g.term.to_string() + ", dim " + std::to_string(g.degeneracy), {}};
  Section s{"ground_state", {"field", "value"}, {}};
  s.rows.push_back({"N", std::to_string(N)});
  s.rows.push_back({"term", g.term.to_string()});
  s.rows.push_back({"L", std::to_string(g.term.L)});
  s.rows.push_back({"S", g.term.twice_S % 2 ? std::to_string(g.term.twice_S) + "/2" : std::to_string(g.term.twice_S / 2)});
  s.rows.push_back({"parity", g.term.parity > 0 ? "even" : "odd"});
  s.rows.push_back({"dim", std::to_string(g.degeneracy)});
  s.rows.push_back({"energy_closed_form", g.level.closed_form()});
  s.rows.push_back({"energy_at_Z_eq_N", fixed4(g.level.energy_double(Z))});
  s.rows.push_back({"state", g.eigenvector});
  s.rows.push_back({"c", g.c ? g.c->to_string() : ""});
  s.rows.push_back({"c_decimal", g.c ? fixed4(g.c->to_double()) : ""});
  r.sections.push_back(std::move(s));
  return r;
}

inline Report sectors_report(int N) {
  Report r{"sectors", "N = " + std::to_string(N) + ", dim V0 = " + std::to_string(ground_space_basis(N).size()), {}};
  Section s{"sectors", {"term", "2M_S", "dim", "L3=0 dim"}, {}};
  for (const auto& sec : simultaneous_eigenspaces(N))
    s.rows.push_back({sec.term().to_string(), std::to_string(sec.twice_MS), std::to_string(sec.dim()),
                      std::to_string(sec.l3zero_basis.size())});
  Section st{"states", {"term", "index", "2s count", "state"}, {}};
  for (const auto& ts : representative_states(N))
    for (std::size_t i = 0; i < ts.states.size(); ++i)
      st.rows.push_back({ts.term.to_string(), std::to_string(i + 1), std::to_string(ts.two_s_count[i]),
                         render_state(ts.states[i], ts.norm2[i])});
  r.sections.push_back(std::move(s));
  r.sections.push_back(std::move(st));
  return r;
}

inline Report vee_matrix_report(int N) {
  Report r{"vee-matrix", "N = " + std::to_string(N), {}};
  Section s{"entries", {"term", "entry", "expression"}, {}};
  for (const auto& b : sector_blocks(N)) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      s.rows.push_back({b.term.to_string(), std::to_string(i + 1) + std::to_string(i + 1), b.diag[i].to_string()});
    if (b.dim() == 2) s.rows.push_back({b.term.to_string(), "12", b.cross_string()});
  }
  r.sections.push_back(std::move(s));
  return r;
}

inline Report integrals_report() {
  Report r{"integrals", "coefficients of Z", {}};
  Section s{"integrals", {"symbol", "value", "decimal"}, {}};
  for (const auto& sym : canonical_symbols()) {
    Rational v = IntegralTable::instance().coefficient(sym);
    s.rows.push_back({sym.to_string(), to_string(v), fixed4(to_double(v))});
  }
  r.sections.push_back(std::move(s));
  return r;
}

/// Reduced gaps on the grid 1/Z = k/(points*N), k = 1..points.
inline Report gaps_report(int N, int points) {
  Report r{"gaps", "N = " + std::to_string(N), {}};
  Section s{"gaps", {"inv_Z", "term", "reduced_gap"}, {}};
  std::vector<Rational> Zs;
  for (int k = 1; k <= points; ++k) Zs.push_back(make_rational(points * N, k));
  for (const auto& p : gap_curves(N, Zs))
    s.rows.push_back({to_string(Rational(1) / p.Z), p.term.to_string(), fixed4(p.reduced_gap)});
  r.sections.push_back(std::move(s));
  return r;
}

inline std::string percent(double x) { return fixed4(x); }

inline Report compare_report(const std::vector<ExperimentRecord>& records, std::optional<int> N,
                             std::optional<Rational> Z) {
  Report r{"compare", "", {}};
  if (!N) {
    r.title = "neutral atoms, ground states";
    Section s{"neutral", {"N", "term", "E_PT", "E_exp", "rel_error_percent"}, {}};
    for (int n = 3; n <= 10; ++n) {
      auto rep = compare_experiment(records, n, Rational(n));
      const auto& g = rep.rows.front();
      s.rows.push_back({std::to_string(n), g.term.to_string(), fixed4(g.e_pt.to_double()),
                        g.e_exp ? fixed4(*g.e_exp) : "", g.relative_error_percent ? percent(*g.relative_error_percent) : ""});
    }
    r.sections.push_back(std::move(s));
    Section inv{"inversions", {"N", "lower_in_PT", "lower_in_experiment"}, {}};
    for (int n = 3; n <= 10; ++n)
      for (const auto& f : compare_experiment(records, n, Rational(n)).inversions)
        inv.rows.push_back({std::to_string(n), f.lower_pt.to_string(), f.higher_pt.to_string()});
    r.sections.push_back(std::move(inv));
    return r;
  }
  const Rational z = Z ? *Z : Rational(*N);
  auto rep = compare_experiment(records, *N, z);
  r.title = "N = " + std::to_string(*N) + ", Z = " + z_string(z);
  Section s{"levels", {"term", "E_PT", "E_exp", "rel_error_percent"}, {}};
  for (const auto& row : rep.rows)
    s.rows.push_back({row.term.to_string(), fixed4(row.e_pt.to_double()), row.e_exp ? fixed4(*row.e_exp) : "",
                      row.relative_error_percent ? percent(*row.relative_error_percent) : ""});
  Section inv{"inversions", {"lower_in_PT", "lower_in_experiment"}, {}};
  for (const auto& f : rep.inversions) inv.rows.push_back({f.lower_pt.to_string(), f.higher_pt.to_string()});
  Section un{"unmatched", {"record"}, {}};
  for (const auto& u : rep.unmatched_records) un.rows.push_back({u});
  r.sections.push_back(std::move(s));
  r.sections.push_back(std::move(inv));
  r.sections.push_back(std::move(un));
  return r;
}

inline Report hund_report() {
  auto h = hund_counterexample_report();
  Report r{"hund", "carbon: E(³S°) - E(¹D°) in units of Z", {}};
  Section s{"hund", {"quantity", "value"}, {}};
  s.rows.push_back({"symbolic_difference", h.symbolic});
  s.rows.push_back({"symbolic_value", to_string(h.symbolic_value)});
  s.rows.push_back({"level_difference", to_string(h.level_value)});
  s.rows.push_back({"paths_agree", h.paths_agree ? "true" : "false"});
  s.rows.push_back({"sign", h.sign < 0 ? "negative" : h.sign > 0 ? "positive" : "zero"});
  s.rows.push_back({"decimal", fixed4(to_double(h.symbolic_value))});
  s.rows.push_back({"literal_target", "16/729 - 81/2560 = " + to_string(h.literal_target)});
  s.rows.push_back({"matches_literal", h.matches_literal ? "true" : "false"});
  s.rows.push_back({"aufbau_difference", h.aufbau_symbolic});
  r.sections.push_back(std::move(s));
  return r;
}

}  // namespace ptatom
