#pragma once

// Decoherence and quantum Zeno timescale toolkit for laser-cooled ions in
// bistable traps. Everything lives in namespace zenodec; this header pulls
// in the full library.

#include "zenodec/csv.hpp"
#include "zenodec/discrete_dynamics.hpp"
#include "zenodec/errors.hpp"
#include "zenodec/master_equation.hpp"
#include "zenodec/potential.hpp"
#include "zenodec/scenarios.hpp"
#include "zenodec/timescales.hpp"
#include "zenodec/units.hpp"
