// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

// ptatom: exact first-order perturbation-theory spectra of light atoms.

#include "ptatom/ptatom.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifndef PTATOM_DEFAULT_DATA_DIR
#define PTATOM_DEFAULT_DATA_DIR "data"
#endif

namespace {

constexpr int kArgumentError = 2;
constexpr int kDataError = 3;

std::string experiment_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PTATOM_DATA_DIR"); env && *env) return std::string(env) + "/experiment.csv";
  return std::string(PTATOM_DEFAULT_DATA_DIR) + "/experiment.csv";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact first-order perturbation-theory spectra of light atoms"};
  app.require_subcommand(1, 1);

  int n = 0;
  std::string z_text, format_text = "table", experiment, out_path;
  int points = 10;

  auto add_common = [&](CLI::App* sub, bool with_n, bool n_required, bool with_z) {
    if (with_n) {
      auto* opt = sub->add_option("--n", n, "electron count (1..10)");
      if (n_required) opt->required();
    }
    if (with_z) sub->add_option("--z", z_text, "nuclear charge as p/q (default N)");
    sub->add_option("--format", format_text, "table, csv or json");
    sub->add_option("--out", out_path, "write output to this file");
  };

  auto* levels = app.add_subcommand("levels", "PT levels with exact and numeric energies");
  add_common(levels, true, true, true);
  auto* ground = app.add_subcommand("ground-state", "ground-state term, degeneracy and state");
  add_common(ground, true, true, false);
  auto* sectors = app.add_subcommand("sectors", "joint (L, S, M_S, parity) eigenspaces");
  add_common(sectors, true, true, false);
  auto* vee = app.add_subcommand("vee-matrix", "symbolic electron-repulsion matrix per term");
  add_common(vee, true, true, false);
  auto* integrals = app.add_subcommand("integrals", "exact two-electron integrals");
  add_common(integrals, false, false, false);
  auto* gaps = app.add_subcommand("gaps", "reduced gaps (E_j - E_1)/Z^2 against 1/Z");
  add_common(gaps, true, true, false);
  gaps->add_option("--points", points, "grid points in 1/Z")->check(CLI::Range(1, 1000));
  auto* compare = app.add_subcommand("compare", "comparison with reference energies");
  add_common(compare, true, false, true);
  compare->add_option("--experiment", experiment, "reference CSV (N,Z,term,energy_hartree,source)");
  auto* hund = app.add_subcommand("hund", "carbon 3S° versus 1D° energy difference");
  add_common(hund, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kArgumentError;
  }

  auto usage_error = [&](const std::string& msg) {
    std::cerr << "error: " << msg << "\n" << app.help();
    return kArgumentError;
  };

  auto format = ptatom::parse_format(format_text);
  if (!format) return usage_error("unknown format '" + format_text + "'");
  CLI::App* cmd = app.get_subcommands().front();
  const bool has_n = cmd->get_option_no_throw("--n") && cmd->count("--n") > 0;
  if (has_n && (n < 1 || n > 10)) return usage_error("--n must be in 1..10");
  std::optional<ptatom::Rational> Z;
  if (!z_text.empty()) {
    Z = ptatom::parse_rational(z_text);
    if (!Z || *Z <= 0) return usage_error("--z must be a positive rational");
  }

  ptatom::Report report;
  try {
    if (cmd == levels) report = ptatom::levels_report(n, Z ? *Z : ptatom::Rational(n));
    else if (cmd == ground) report = ptatom::ground_state_summary(n);
    else if (cmd == sectors) report = ptatom::sectors_report(n);
    else if (cmd == vee) report = ptatom::vee_matrix_report(n);
    else if (cmd == integrals) report = ptatom::integrals_report();
    else if (cmd == gaps) report = ptatom::gaps_report(n, points);
    else if (cmd == hund) report = ptatom::hund_report();
    else if (cmd == compare) {
      if (Z && !has_n) return usage_error("--z requires --n");
      auto records = ptatom::load_experiment_csv(experiment_path(experiment));
      report = ptatom::compare_report(records, has_n ? std::optional<int>(n) : std::nullopt, Z);
    }
  } catch (const ptatom::DataFileError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kDataError;
  }

  const std::string text = ptatom::render(report, *format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) return usage_error("cannot write " + out_path);
    f << text;
  }
  return 0;
}
