#pragma once

#include "pointed/end_algebra.hpp"
#include "pointed/expression.hpp"
#include "pointed/linalg.hpp"
#include "pointed/random.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pointed {

using EndBindings = std::map<std::string, EndElement>;

/// Evaluates an expression in End(H (x) M): numbers are scalar multiples of
/// the identity, e(i) the block idempotents, t(i,j,l) the embedded arrow
/// (dims (1, ..., 1) only) and inv() the block geometric-series inverse.
EndElement eval_end(const Expression &e, const EndHandle &ambient, const EndBindings &names = {});

/// A k-algebra A given by generators, with rho: A -> End(H (x) M) fixed on the
/// generators. Relators are checked against rho but never used to rewrite.
struct AlgebraPresentation
{
	EndHandle ambient;
	std::vector<std::string> generators;
	std::vector<Expression> relators;
	std::vector<EndElement> rho;
	/// Expressions whose images should be inverted.
	std::vector<Expression> invert_hints;

	EndBindings bindings() const;
	EndElement image(const Expression &e) const { return eval_end(e, ambient, bindings()); }
};

/// Throws PreconditionFailure when arities disagree or a relator survives
/// rho, and NonUnitError when a hint's image is not a unit.
void validate(const AlgebraPresentation &presentation);

/// How a spanning element of a closure arose; used to replay it elsewhere.
struct Provenance
{
	enum class Kind
	{
		Idempotent,
		Seed,
		Product
	};
	Kind kind;
	std::size_t vertex = 0;
	Expression expression{};
	std::size_t left = 0;
	std::size_t right = 0;
};

struct Seed
{
	EndElement element;
	Expression expression{};
};

/**
 * Finite-dimensional subalgebra of End(H (x) M), kept as a list of linearly
 * independent spanning elements (each with its provenance) plus a reduced
 * echelon form of their coordinates over the ambient slot basis.
 */
class SubalgebraBasis
{
public:
	explicit SubalgebraBasis(EndHandle ambient);
	/// Plain span, no closure.
	static SubalgebraBasis span_of(EndHandle ambient, const std::vector<Seed> &elements);

	const EndHandle &ambient() const noexcept { return ambient_; }
	std::size_t dimension() const noexcept { return elements_.size(); }
	const std::vector<EndElement> &elements() const noexcept { return elements_; }
	const std::vector<Provenance> &provenance() const noexcept { return provenance_; }
	/// Expression (in generators, e(i) and inv) evaluating to elements()[i].
	Expression expression(std::size_t i) const;

	/// Reduced echelon rows grouped by the length of their pivot path.
	std::vector<std::vector<EndElement>> by_degree() const;
	std::vector<std::size_t> dimension_by_degree() const;

	bool contains(const EndElement &x) const;
	/// Coordinates of x over elements(); nothing when x is outside the span.
	std::optional<std::vector<Scalar>> coordinates(const EndElement &x) const;
	bool same_span(const SubalgebraBasis &other) const;

	/// Adds x when it is independent of the current span.
	bool add(const EndElement &x, Provenance provenance);

private:
	EndHandle ambient_;
	std::vector<EndElement> elements_;
	std::vector<Provenance> provenance_;
	SparseEchelon<Slot, SlotOrder> echelon_;
};

/// Smallest subspace containing the block idempotents and the seeds that is
/// closed under multiplication; each new element is multiplied on both sides
/// by every earlier one until nothing new appears.
SubalgebraBasis generated_subalgebra(const EndHandle &ambient, const std::vector<Seed> &seeds);

/// O^A_M at the truncation: generated by rho(g), inverses of hint images and
/// inverses of generator images that are units.
SubalgebraBasis local_function_ring(const AlgebraPresentation &presentation);

/// Re-runs the construction with the basis itself as generators (and every
/// unit among them inverted) and reports whether the span is unchanged.
bool idempotence_check(const SubalgebraBasis &basis);
bool idempotence_check(const SubalgebraBasis &basis, const AlgebraPresentation &presentation);

struct InducedMorphism
{
	SubalgebraBasis source_basis;
	SubalgebraBasis target_basis;
	/// phi*(b) for each spanning element b of the source basis.
	std::vector<EndElement> images;
	/// Coordinates of each image over target_basis.elements().
	std::vector<std::optional<std::vector<Scalar>>> coordinates;
	bool contained = false;
};

/// phi*: O^A -> O^B for phi given on the generators of A as expressions in
/// the generators of B. When the ambients differ, `base_map` is the algebra
/// map psi between the bases and compatibility means
/// Pi(psi)(rho_A(g)) = rho_B(phi(g)). Throws PreconditionFailure when that
/// fails or when an inverse used by O^A maps to a non-unit.
InducedMorphism induced_morphism(const std::map<std::string, Expression> &phi,
                                 const AlgebraPresentation &source,
                                 const AlgebraPresentation &target,
                                 const std::optional<AlgebraMorphism> &base_map = std::nullopt);

/// With M_i = k at every vertex, End(H (x) M) is H again: checks that the
/// canonical map is a bijection on monomial bases and multiplicative on
/// `samples` random pairs.
bool self_completion_check(const AlgebraHandle &algebra, Rng &rng, std::size_t samples = 200);

} // namespace pointed
