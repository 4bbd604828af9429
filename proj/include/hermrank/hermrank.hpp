#pragma once

// Umbrella header: exact-arithmetic toolkit for orthogonal pairs of
// polynomial maps between hermitian spaces with possibly degenerate,
// indefinite forms.  Everything lives in namespace hermrank.

#include "errors.hpp"     // error hierarchy
#include "rational.hpp"   // exact rationals (GMP-backed)
#include "gaussian.hpp"   // Q(i)
#include "monomial.hpp"   // graded-lex monomials
#include "poly.hpp"       // multivariate polynomials, homogenization
#include "matrix.hpp"     // exact linear algebra over Q(i)
#include "biform.hpp"     // z/zbar biforms: division, rank, signature
#include "pairs.hpp"      // orthogonal pairs: verify, classify, decompose
#include "rng.hpp"        // deterministic seeded randomness
#include "gen.hpp"        // fixture generators and subspace sampling
#include "numcheck.hpp"   // floating-point cross-checks
#include "io.hpp"         // JSON serialization
