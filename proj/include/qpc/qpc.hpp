#pragma once

// Umbrella header: exact Ehrhart quasi-polynomials of rational polytopes,
// quasi-period collapse detection, verification of lattice
// equidecomposability certificates, and reflexive-polygon duality.

#include "qpc/rational.hpp"
#include "qpc/linalg.hpp"
#include "qpc/lp.hpp"
#include "qpc/affine_map.hpp"
#include "qpc/simplex.hpp"
#include "qpc/polytope.hpp"
#include "qpc/forms.hpp"
#include "qpc/counting.hpp"
#include "qpc/quasipoly.hpp"
#include "qpc/equidecomp.hpp"
#include "qpc/reflexive.hpp"
#include "qpc/fixtures.hpp"
#include "qpc/ehrhart.hpp"
#include "qpc/io.hpp"
