#pragma once

#include "pointed/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pointed {

/// Basis vector t(source, target, label) of V_{source,target}. Vertices and
/// labels are 1-based.
struct Arrow
{
	std::uint32_t source;
	std::uint32_t target;
	std::uint32_t label;

	friend auto operator<=>(const Arrow &, const Arrow &) = default;
};

/// r vertices and a finite set of labelled arrows, kept sorted by
/// (source, target, label) so that arrow indices realize the monomial order.
class Quiver
{
public:
	Quiver(std::size_t vertices, std::vector<Arrow> arrows);
	/// Arrow counts l_ij as an r x r matrix; labels run 1..l_ij.
	static Quiver from_counts(const std::vector<std::vector<std::size_t>> &counts);

	std::size_t vertices() const noexcept { return vertices_; }
	const std::vector<Arrow> &arrows() const noexcept { return arrows_; }
	const Arrow &arrow(std::size_t index) const { return arrows_.at(index); }
	std::optional<std::size_t> find(const Arrow &a) const;
	/// Indices of arrows leaving `vertex`, in arrow order.
	const std::vector<std::size_t> &outgoing(std::size_t vertex) const
	{
		return outgoing_.at(vertex - 1);
	}
	std::size_t count(std::size_t source, std::size_t target) const;

	friend bool operator==(const Quiver &a, const Quiver &b)
	{
		return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
	}

private:
	std::size_t vertices_;
	std::vector<Arrow> arrows_;
	std::vector<std::vector<std::size_t>> outgoing_;
};

/// A composable sequence of arrows; the empty sequence is the trivial path
/// e_start. Ordered by length, then lexicographically on arrow indices.
class Path
{
public:
	static Path trivial(std::uint32_t vertex) { return Path(vertex, vertex, {}); }
	static Path arrow(const Quiver &quiver, std::size_t index);
	/// Validates composability against `quiver`.
	static Path from_arrows(const Quiver &quiver, std::vector<std::uint32_t> arrows);

	std::uint32_t source() const noexcept { return source_; }
	std::uint32_t target() const noexcept { return target_; }
	std::size_t length() const noexcept { return arrows_.size(); }
	const std::vector<std::uint32_t> &arrows() const noexcept { return arrows_; }

	/// Concatenation p.q, defined when target(p) = source(q).
	std::optional<Path> concat(const Path &other) const;

	std::string to_string(const Quiver &quiver) const;

	friend bool operator==(const Path &, const Path &) = default;
	friend std::strong_ordering operator<=>(const Path &a, const Path &b)
	{
		if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0)
			return c;
		if (auto c = a.source_ <=> b.source_; c != 0)
			return c;
		return a.arrows_ <=> b.arrows_;
	}

private:
	Path(std::uint32_t source, std::uint32_t target, std::vector<std::uint32_t> arrows)
	    : source_(source), target_(target), arrows_(std::move(arrows))
	{}

	std::uint32_t source_;
	std::uint32_t target_;
	std::vector<std::uint32_t> arrows_;
};

/// Order used to pick pivots when reducing modulo relations: lowest degree
/// first, and within one degree the largest monomial. Keeping the degree
/// primary makes normal forms compatible with every truncation d <= N.
struct PivotOrder
{
	bool operator()(const Path &a, const Path &b) const
	{
		if (a.length() != b.length())
			return a.length() < b.length();
		return b < a;
	}
};

using Terms = std::map<Path, Scalar>;
using RelationSet = std::vector<Terms>;

class TruncatedAlgebra;
using AlgebraHandle = std::shared_ptr<const TruncatedAlgebra>;

/// A finite linear combination of paths of length <= N, in normal form.
class Element
{
public:
	explicit Element(AlgebraHandle algebra);
	/// Normalizes `terms`: drops zeros and paths longer than N, then reduces
	/// modulo the relations.
	Element(AlgebraHandle algebra, Terms terms);

	const AlgebraHandle &algebra() const noexcept { return algebra_; }
	const Terms &terms() const noexcept { return terms_; }
	bool is_zero() const noexcept { return terms_.empty(); }
	Scalar coefficient(const Path &path) const;
	/// Lowest length of a path in the support; nothing for zero.
	std::optional<std::size_t> valuation() const;

	Element operator-() const;
	Element &operator+=(const Element &other);
	Element &operator-=(const Element &other);
	friend Element operator+(Element a, const Element &b) { return a += b; }
	friend Element operator-(Element a, const Element &b) { return a -= b; }
	friend Element operator*(const Element &a, const Element &b);
	friend Element operator*(const Scalar &c, const Element &x);

	friend bool operator==(const Element &a, const Element &b);

	/// Canonical serialization: terms in monomial order, e.g.
	/// "e(1) + 3/2*t(1,2,1) - t(1,2,1)*t(2,1,1)". Zero is "0".
	std::string to_string() const;

private:
	friend class TruncatedAlgebra;
	struct Raw
	{};
	Element(AlgebraHandle algebra, Terms terms, Raw) : algebra_(std::move(algebra)), terms_(std::move(terms)) {}

	void check_same(const Element &other) const;

	AlgebraHandle algebra_;
	Terms terms_;
};

/**
 * The quotient of the path algebra F(V) by a relation ideal, truncated
 * modulo m^(N+1) where m is spanned by paths of positive length.
 *
 * Reduction data: the ideal's slice in degrees <= N is the span of all
 * truncated products u*rel*v over monomials u, v. That span is kept in
 * reduced echelon form with pivots chosen by PivotOrder; the non-pivot
 * paths are the normal-form monomials.
 */
class TruncatedAlgebra : public std::enable_shared_from_this<TruncatedAlgebra>
{
public:
	/// Throws InvalidArgument when a relation has a term of length < 2 or is
	/// zero.
	static AlgebraHandle build(Quiver quiver, FieldSpec field, std::size_t order,
	                           RelationSet relations = {});

	const Quiver &quiver() const noexcept { return quiver_; }
	const FieldSpec &field() const noexcept { return field_; }
	std::size_t order() const noexcept { return order_; }
	std::size_t vertices() const noexcept { return quiver_.vertices(); }
	const RelationSet &relations() const noexcept { return relations_; }
	bool has_relations() const noexcept { return !rewrite_.empty(); }

	/// All paths of length exactly d, in monomial order.
	std::vector<Path> paths_of_length(std::size_t d) const;
	/// Normal-form monomials of length exactly d.
	std::vector<Path> monomial_basis(std::size_t d) const;
	/// Normal-form monomials from vertex i to vertex j of every length <= N.
	std::vector<Path> monomial_basis(std::size_t source, std::size_t target) const;
	std::size_t dimension(std::size_t d) const;
	std::size_t dimension() const;
	/// Rank of the relation ideal restricted to degree d.
	std::size_t ideal_rank(std::size_t d) const;
	bool is_normal(const Path &path) const { return !rewrite_.contains(path); }

	/// Reduces terms in place modulo the relations.
	void normalize(Terms &terms) const;

	Element zero() const;
	Element one() const;
	Element idempotent(std::size_t vertex) const;
	Element arrow(std::size_t source, std::size_t target, std::size_t label) const;
	Element monomial(const Path &path, const Scalar &coefficient) const;
	Element scalar(const Scalar &c) const;

	/// Structural identity: same quiver, field, order and relations.
	bool same_as(const TruncatedAlgebra &other) const;

private:
	TruncatedAlgebra(Quiver quiver, FieldSpec field, std::size_t order, RelationSet relations);
	void build_reduction();

	Quiver quiver_;
	FieldSpec field_;
	std::size_t order_;
	RelationSet relations_;
	// pivot path -> its normal form (a combination of normal monomials)
	std::map<Path, std::vector<std::pair<Path, Scalar>>> rewrite_;
};

AlgebraHandle build_algebra(const Quiver &quiver, const FieldSpec &field, std::size_t order,
                            const RelationSet &relations = {});

Element multiply(const Element &x, const Element &y);
Element add(const Element &x, const Element &y);
Element scale(const Scalar &c, const Element &x);
/// Drops paths of length > d. Throws InvalidArgument when d > N.
Element truncate(const Element &x, std::size_t d);
std::vector<Path> monomial_basis(const TruncatedAlgebra &algebra, std::size_t d);

/// k^r-algebra map between truncated algebras, given by the images of the
/// arrows. Images must lie in e_s T e_t with no degree-0 part, the target
/// order must not exceed the source order, and every source relation must
/// map to zero.
class AlgebraMorphism
{
public:
	AlgebraMorphism(AlgebraHandle source, AlgebraHandle target, std::vector<Element> arrow_images);
	static AlgebraMorphism identity(const AlgebraHandle &algebra);

	const AlgebraHandle &source() const noexcept { return source_; }
	const AlgebraHandle &target() const noexcept { return target_; }

	Element operator()(const Element &x) const;

private:
	Element apply_terms(const Terms &terms) const;

	AlgebraHandle source_;
	AlgebraHandle target_;
	std::vector<Element> images_;
};

} // namespace pointed
