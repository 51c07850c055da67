#pragma once

// Umbrella header: tableau combinatorics on row-convex shapes, flagged-minor
// expansions, section-space bases with exact linear algebra, leading-exponent
// lattice points, and the tri-graded degeneration example.

#include "bslab/degeneration3.hpp"
#include "bslab/errors.hpp"
#include "bslab/json_io.hpp"
#include "bslab/lattice.hpp"
#include "bslab/linalg.hpp"
#include "bslab/minors.hpp"
#include "bslab/numeric.hpp"
#include "bslab/plucker3.hpp"
#include "bslab/polynomial.hpp"
#include "bslab/section_ring.hpp"
#include "bslab/shape.hpp"
#include "bslab/tableau.hpp"
#include "bslab/word.hpp"
