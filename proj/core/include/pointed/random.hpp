#pragma once

#include "pointed/end_algebra.hpp"
#include "pointed/path_algebra.hpp"

#include <cstddef>
#include <random>

namespace pointed {

using Rng = std::mt19937_64;

/// Small-height scalar: p/q with |p| <= 5, 1 <= q <= 4 over Q, uniform over F_p.
Scalar random_scalar(const FieldSpec &field, Rng &rng, bool nonzero = false);

/// Random walk of length <= max_length from a uniform start vertex; stops
/// early at a vertex with no outgoing arrows.
Path random_path(const TruncatedAlgebra &algebra, Rng &rng, std::size_t max_length);

/// Combination of up to `max_terms` random paths (possibly zero).
Element random_element(const AlgebraHandle &algebra, Rng &rng, std::size_t max_terms);

/// random_element with every degree-0 coefficient replaced by a nonzero one.
Element random_unit(const AlgebraHandle &algebra, Rng &rng, std::size_t max_terms);

/// Uniform choice of up to `max_terms` ambient slots with random coefficients.
EndElement random_end_element(const EndHandle &algebra, Rng &rng, std::size_t max_terms);

} // namespace pointed
