#pragma once

#include "pointed/path_algebra.hpp"

#include <cstddef>
#include <vector>

namespace pointed {

/// (alpha_1, ..., alpha_r) = pi(x) in k^r.
using AugmentationValue = std::vector<Scalar>;

/// Either a unit, or a non-unit together with every i such that x lies in
/// the maximal ideal m_i = ker pi_i (1-based, ascending, nonempty).
struct Classification
{
	std::vector<std::size_t> vanishing;

	bool is_unit() const noexcept { return vanishing.empty(); }
	friend bool operator==(const Classification &, const Classification &) = default;
};

/// Degree-0 coefficients: alpha_i is the coefficient of e_i.
AugmentationValue augment(const Element &x);

/// rho(alpha) = sum alpha_i e_i.
Element lift(const TruncatedAlgebra &algebra, const AugmentationValue &alpha);

/// True iff pi_i(x) = 0. Throws InvalidArgument for i outside [1, r].
bool in_maximal_ideal(const Element &x, std::size_t i);

Classification classify(const Element &x);

/// Right inverse (sum_{i=0}^N m1^i) rho(alpha^-1) with m1 = rho(alpha^-1) n,
/// n = rho(alpha) - x. The series is exact because m1^(N+1) = 0.
Element right_inverse(const Element &x);
/// Left inverse rho(alpha^-1) (sum_{i=0}^N m2^i) with m2 = n rho(alpha^-1).
Element left_inverse(const Element &x);

/// Two-sided inverse. Throws NonUnitError carrying the vanishing set when x
/// is not a unit; the result is checked on both sides before returning.
Element invert(const Element &x);

/// T = F(V)/(ker pi)^2 for arrow counts l_ij: the free algebra truncated at
/// order 1.
AlgebraHandle tangent_algebra(const std::vector<std::vector<std::size_t>> &counts,
                              const FieldSpec &field = FieldSpec::rationals());

} // namespace pointed
