#pragma once

// Umbrella header: exact q-series arithmetic, generalized Schroder path
// enumeration, the q-difference solvers for their generating functions,
// colored HOMFLY-PT invariants of torus knots, and the identity
// verification suites tying the two sides together.

#include "schroder/bigint.hpp"
#include "schroder/characters.hpp"
#include "schroder/errors.hpp"
#include "schroder/io.hpp"
#include "schroder/jacobi_trudi.hpp"
#include "schroder/nut_series.hpp"
#include "schroder/partition.hpp"
#include "schroder/path_oracle.hpp"
#include "schroder/q_series.hpp"
#include "schroder/slope_family.hpp"
#include "schroder/strip_solver.hpp"
#include "schroder/torus_knot.hpp"
#include "schroder/verify.hpp"
#include "schroder/weight_table.hpp"
#include "schroder/x_series.hpp"
