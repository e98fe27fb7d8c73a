#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pointed::lab {

using Elem = std::uint16_t;
/// Membership mask indexed by element.
using Subset = std::vector<bool>;

/// Largest ring accepted; construction checks the axioms in O(n^3).
inline constexpr std::size_t max_ring_size = 256;

/**
 * Finite unital ring given by its addition and multiplication tables.
 * Elements are 0..n-1; the constructor verifies every ring axiom exhaustively
 * and rejects the zero ring.
 */
class FiniteRing
{
public:
	FiniteRing(std::string name, std::vector<std::string> labels, std::vector<Elem> add,
	           std::vector<Elem> mul, Elem zero, Elem one);

	const std::string &name() const noexcept { return name_; }
	std::size_t size() const noexcept { return labels_.size(); }
	Elem zero() const noexcept { return zero_; }
	Elem one() const noexcept { return one_; }
	const std::string &label(Elem x) const { return labels_.at(x); }
	std::optional<Elem> find(std::string_view label) const;

	Elem add(Elem a, Elem b) const { return add_[a * size() + b]; }
	Elem mul(Elem a, Elem b) const { return mul_[a * size() + b]; }
	Elem neg(Elem a) const { return neg_[a]; }
	Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

	Subset full() const { return Subset(size(), true); }
	std::vector<std::string> labels_of(const Subset &s) const;

	/// Same labels and tables.
	bool operator==(const FiniteRing &o) const
	{
		return labels_ == o.labels_ && add_ == o.add_ && mul_ == o.mul_ && zero_ == o.zero_ &&
		       one_ == o.one_;
	}

private:
	std::string name_;
	std::vector<std::string> labels_;
	std::vector<Elem> add_, mul_, neg_;
	Elem zero_, one_;
};

using RingHandle = std::shared_ptr<const FiniteRing>;

/// Tables from element-level operations on 0..n-1.
RingHandle tabulate(std::string name, std::vector<std::string> labels,
                    const std::function<Elem(Elem, Elem)> &add,
                    const std::function<Elem(Elem, Elem)> &mul, Elem zero, Elem one);

// Element encodings: Z/n and F_p use residues; polynomial quotients use
// sum c_i p^i over coefficients c_0, c_1, ...; matrix rings use the same
// digit encoding over the entries in row-major order (UT over the entries on
// or above the diagonal); products encode (a, b) as a + |A| b.
RingHandle integers_mod(std::size_t n);
RingHandle prime_field(std::size_t p);
RingHandle matrix_ring(std::size_t p, std::size_t k);
RingHandle upper_triangular(std::size_t p, std::size_t k);
/// F_p[x]/(m) for a monic m given by its coefficients, low degree first.
RingHandle poly_quotient(std::size_t p, std::vector<std::size_t> modulus, std::string name);
RingHandle truncated_poly(std::size_t p, std::size_t k);
/// F_4 = F_2[w]/(w^2 + w + 1).
RingHandle gf4();
RingHandle product(const RingHandle &a, const RingHandle &b);

/// F<p>, F4, Z/<n>, M<k>(F<p>), UT<k>(F<p>), F<p>[x]/(x^<k>), and products
/// joined with '*'. Throws InvalidArgument on anything else.
RingHandle ring_from_name(std::string_view name);

/// The ring fixtures the lab checks by default.
std::vector<RingHandle> standard_suite();

Subset units_of(const FiniteRing &r);
std::size_t count(const Subset &s);

/// Smallest subset containing `seed` closed under +, negation, and
/// multiplication by R on the chosen sides.
enum class Side
{
	Left,
	Right,
	Both
};
Subset ideal_closure(const FiniteRing &r, const Subset &seed, Side side);
Subset two_sided_ideal(const FiniteRing &r, Elem x);

struct LocalReport
{
	/// Non-units form a left ideal: the unique maximal left ideal.
	bool unique_maximal_left = false;
	bool unique_maximal_right = false;
	/// For every x, x or 1 - x is a unit.
	bool x_or_complement_unit = false;
	std::optional<Elem> witness;
	/// Non-units, which are the maximal ideal when the ring is local.
	Subset non_units;
	/// Counts of maximal proper left/right ideals from a scan of all subsets
	/// (rings of at most 16 elements only).
	std::optional<std::size_t> maximal_left_enumerated;
	std::optional<std::size_t> maximal_right_enumerated;

	bool local() const { return unique_maximal_left && unique_maximal_right && x_or_complement_unit; }
	bool consistent() const;
};

LocalReport check_local_equivalences(const FiniteRing &r);

struct MaximalIdealReport
{
	std::vector<Subset> ideals;
	std::vector<Subset> maximal;
	bool unique() const { return maximal.size() == 1; }
};

/// All two-sided ideals (closures of singletons, then sums to a fixpoint)
/// and the maximal proper ones among them.
MaximalIdealReport unique_maximal_two_sided(const FiniteRing &r);

/// Right module over a finite ring: abelian group table plus action table
/// indexed (module element, ring element). Axioms checked on construction.
class FiniteModule
{
public:
	FiniteModule(RingHandle ring, std::vector<std::string> labels, std::vector<Elem> add,
	             std::vector<Elem> act, Elem zero);

	const RingHandle &ring() const noexcept { return ring_; }
	std::size_t size() const noexcept { return labels_.size(); }
	Elem zero() const noexcept { return zero_; }
	const std::string &label(Elem m) const { return labels_.at(m); }
	Elem add(Elem a, Elem b) const { return add_[a * size() + b]; }
	Elem act(Elem m, Elem r) const { return act_[m * ring_->size() + r]; }
	const std::vector<std::string> &labels() const noexcept { return labels_; }
	const std::vector<Elem> &add_table() const noexcept { return add_; }

private:
	RingHandle ring_;
	std::vector<std::string> labels_;
	std::vector<Elem> add_, act_;
	Elem zero_;
};

FiniteModule zero_module(const RingHandle &r);
FiniteModule regular_module(const RingHandle &r);
/// Row vectors F_p^k acted on by matrix_ring(p, k) from the right.
FiniteModule row_vectors(std::size_t p, std::size_t k);

struct RingMap
{
	RingHandle source;
	RingHandle target;
	std::vector<Elem> table;

	/// Throws PreconditionFailure unless the table is a unital homomorphism.
	RingMap(RingHandle source, RingHandle target, std::vector<Elem> table);
	Elem operator()(Elem a) const { return table.at(a); }
};

RingMap identity_map(const RingHandle &r);
/// F_p -> R, k -> k * 1. Requires char R = p.
RingMap unit_map(std::size_t p, const RingHandle &r);
/// F_p[x]/(x^k) -> F_p, x -> 0.
RingMap augmentation_map(std::size_t p, std::size_t k);
/// UT_2(F_p) -> F_p x F_p, the diagonal.
RingMap diagonal_map(std::size_t p);

/// M with the action m . a := m . f(a).
FiniteModule pullback(const FiniteModule &m, const RingMap &f);

bool is_simple(const FiniteModule &m);

struct PullbackReport
{
	bool source_simple = false;
	bool target_simple = false;
	/// Source-simple implies target-simple.
	bool holds() const { return !source_simple || target_simple; }
};

PullbackReport simple_pullback_check(const RingMap &f, const FiniteModule &m);

} // namespace pointed::lab
