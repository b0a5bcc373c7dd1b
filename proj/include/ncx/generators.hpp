#pragma once

#include <random>

#include "ncx/ncomplex.hpp"

namespace ncx {

using Rng = std::mt19937_64;

// Uniform field element (full residue range for prime fields, small integer
// coefficients for cyclotomic ones).
Scalar random_scalar(const Field& f, Rng& rng);

Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng);
Matrix random_invertible(const Field& f, int n, Rng& rng);

// Nilpotent endomorphism with d^N = 0: a direct sum of shift strings of
// length <= N conjugated by a random change of basis.
Matrix random_nilpotent(const QContext& ctx, int dim, Rng& rng);
NDiffModule random_module(const QContext& ctx, int dim, Rng& rng);

// Random polynomial in d (a module self-map commuting with d).
Matrix random_poly_in_d(const NDiffModule& E, Rng& rng);

// Finite cochain complex on degrees [lo, lo+len-1] assembled from shifted
// strings of length <= N and conjugated degreewise; degrees outside the
// window are genuinely zero.
NComplex random_ncomplex(const QContext& ctx, int lo, int len, int max_dim, Rng& rng);

// Submodule spanned by the d-orbits of a few random vectors, with quotient;
// yields a validated short exact sequence.
SESUngraded random_ses(const QContext& ctx, int dim, Rng& rng);
SESGraded random_ses_graded(const QContext& ctx, int lo, int len, int max_dim, Rng& rng);

}  // namespace ncx
