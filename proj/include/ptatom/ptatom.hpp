// Copyright 2026 The ptatom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ptatom/rational.hpp"
#include "ptatom/gaussian_rational.hpp"
#include "ptatom/determinant.hpp"
#include "ptatom/exact_linalg.hpp"
#include "ptatom/symmetry.hpp"
#include "ptatom/integrals.hpp"
#include "ptatom/surd.hpp"
#include "ptatom/hamiltonian.hpp"
#include "ptatom/spectra.hpp"
#include "ptatom/report.hpp"
