#pragma once

#include "pointed/linalg.hpp"
#include "pointed/path_algebra.hpp"
#include "pointed/pointed.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace pointed {

/// One square matrix over k per vertex: the image in the sum of End_k(M_i).
using BlockAugmentation = std::vector<Matrix>;

class EndAlgebra;
using EndHandle = std::shared_ptr<const EndAlgebra>;

/// A coordinate of the ambient k-basis of End(H (x) M): the global matrix
/// position (row, col) carrying a normal-form path from vertex(row) to
/// vertex(col).
struct Slot
{
	std::size_t row;
	std::size_t col;
	Path path;

	friend bool operator==(const Slot &, const Slot &) = default;
};

/// Filtration-first order on slots: path length, then position, then path.
struct SlotOrder
{
	bool operator()(const Slot &a, const Slot &b) const
	{
		if (a.path.length() != b.path.length())
			return a.path.length() < b.path.length();
		if (a.row != b.row)
			return a.row < b.row;
		if (a.col != b.col)
			return a.col < b.col;
		return a.path < b.path;
	}
};

using SlotVector = SparseVector<Slot, SlotOrder>;

/// An endomorphism of H (x) M, stored as the D x D matrix (D = sum d_i) of its
/// entries; entry (I, J) lies in e_i H e_j where I is in block i and J in
/// block j.
class EndElement
{
public:
	explicit EndElement(EndHandle algebra);
	/// Row-major D x D entries; throws InvalidArgument on a support violation.
	EndElement(EndHandle algebra, std::vector<Element> entries);

	const EndHandle &algebra() const noexcept { return algebra_; }
	const Element &entry(std::size_t row, std::size_t col) const;
	const std::vector<Element> &entries() const noexcept { return entries_; }
	bool is_zero() const;

	EndElement operator-() const;
	EndElement &operator+=(const EndElement &other);
	EndElement &operator-=(const EndElement &other);
	friend EndElement operator+(EndElement a, const EndElement &b) { return a += b; }
	friend EndElement operator-(EndElement a, const EndElement &b) { return a -= b; }
	friend EndElement operator*(const EndElement &a, const EndElement &b);
	friend EndElement operator*(const Scalar &c, const EndElement &x);
	friend bool operator==(const EndElement &a, const EndElement &b);

	std::string to_string() const;

private:
	void check_same(const EndElement &other) const;

	EndHandle algebra_;
	std::vector<Element> entries_;
};

/// End_H(H (x)_{k^r} M) for M = sum M_i with dim M_i = d_i.
class EndAlgebra : public std::enable_shared_from_this<EndAlgebra>
{
public:
	static EndHandle build(AlgebraHandle base, std::vector<std::size_t> dims);

	const AlgebraHandle &base() const noexcept { return base_; }
	const std::vector<std::size_t> &dims() const noexcept { return dims_; }
	const FieldSpec &field() const noexcept { return base_->field(); }
	std::size_t vertices() const noexcept { return dims_.size(); }
	/// D = sum d_i.
	std::size_t size() const noexcept { return vertex_of_.size(); }
	/// 1-based vertex owning global row/column `index`.
	std::size_t vertex_of(std::size_t index) const { return vertex_of_.at(index); }
	std::size_t offset(std::size_t vertex) const { return offsets_.at(vertex - 1); }

	EndElement zero() const;
	EndElement identity() const;
	/// Identity on block i, zero elsewhere.
	EndElement idempotent(std::size_t vertex) const;
	/// Constant lift: entry (I, J) of block i is a(I, J) e_i.
	EndElement lift(const BlockAugmentation &blocks) const;
	/// For dims (1, ..., 1): the canonical H -> End map, entries e_i x e_j.
	EndElement embed(const Element &x) const;

	/// Ambient k-basis, in SlotOrder.
	std::vector<Slot> slot_basis() const;
	std::size_t dimension() const;
	SlotVector coordinates(const EndElement &x) const;
	EndElement from_coordinates(const SlotVector &v) const;

	bool same_as(const EndAlgebra &other) const;

private:
	EndAlgebra(AlgebraHandle base, std::vector<std::size_t> dims);

	AlgebraHandle base_;
	std::vector<std::size_t> dims_;
	std::vector<std::size_t> offsets_;
	std::vector<std::size_t> vertex_of_;
};

EndHandle build_end_algebra(AlgebraHandle base, std::vector<std::size_t> dims);

EndElement end_multiply(const EndElement &x, const EndElement &y);
EndElement end_add(const EndElement &x, const EndElement &y);
/// Entrywise truncation to order d.
EndElement end_truncate(const EndElement &x, std::size_t d);

/// Degree-0 coefficients of the diagonal blocks.
BlockAugmentation block_augment(const EndElement &x);

/// Unit iff every diagonal augmentation block is invertible; otherwise the
/// singular blocks are reported.
Classification end_classify(const EndElement &x);

/// Two-sided inverse by the geometric series around the constant lift L of
/// block_augment(x): n = L - x, m1 = L^-1 n, u = (sum m1^i) L^-1. Throws
/// NonUnitError naming the singular blocks.
EndElement end_invert(const EndElement &x);

/// Pi(phi): apply phi to every entry. `target` must be built over
/// phi.target() with the same dims.
EndElement push_along(const AlgebraMorphism &phi, const EndElement &x, const EndHandle &target);
EndElement push_along(const AlgebraMorphism &phi, const EndElement &x);

/// True iff block_augment(rho[g]) == eta[g] for every generator g. Throws
/// InvalidArgument on arity or shape mismatch.
bool check_diagram(const std::vector<EndElement> &rho, const std::vector<BlockAugmentation> &eta);

} // namespace pointed
