#pragma once

#include "plumbcalc/borromean.hpp"
#include "plumbcalc/d_invariants.hpp"
#include "plumbcalc/graph.hpp"
#include "plumbcalc/hf_rank.hpp"
#include "plumbcalc/knot.hpp"
#include "plumbcalc/lattice.hpp"
#include "plumbcalc/lefschetz.hpp"
#include "plumbcalc/matrix.hpp"
#include "plumbcalc/numeric.hpp"
