// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

// Prints the PT ground state of every neutral atom H..Ne.

#include "ptatom/ptatom.hpp"

#include <iostream>

int main() {
  for (int n = 1; n <= 10; ++n) {
    auto g = ptatom::ground_state_report(n);
    std::cout << n << "  " << g.term.to_string() << "  dim " << g.degeneracy << "  E = "
              << g.level.closed_form() << " = " << ptatom::fixed4(g.level.energy_double(ptatom::Rational(n)))
              << "\n";
  }
}
