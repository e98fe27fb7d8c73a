#pragma once

#include "pointed/error.hpp"
#include "pointed/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pointed {

/// Sparse vector over k with coordinates ordered by Compare. The first key in
/// that order is the pivot of a row.
template <class Key, class Compare = std::less<Key>>
using SparseVector = std::map<Key, Scalar, Compare>;

template <class Key, class Compare>
void axpy(SparseVector<Key, Compare> &y, const Scalar &a, const SparseVector<Key, Compare> &x)
{
	for (const auto &[key, value] : x) {
		auto [it, inserted] = y.try_emplace(key, a * value);
		if (!inserted) {
			it->second += a * value;
			if (it->second.is_zero())
				y.erase(it);
		}
	}
}

/// Sparse vector of coefficients over previously inserted vectors.
using Combination = std::map<std::size_t, Scalar>;

/**
 * Incrementally maintained reduced row echelon basis of a subspace.
 *
 * Every stored row has pivot coefficient 1 and no other row's pivot in its
 * support, so reduction is a single pass over the support of the input.
 * Each row also remembers which combination of inserted vectors produced it;
 * insertion i is tagged with index i (counting only accepted insertions).
 */
template <class Key, class Compare = std::less<Key>>
class SparseEchelon
{
public:
	using Vector = SparseVector<Key, Compare>;

	struct Row
	{
		Vector vector;
		Combination combination;
	};

	/// Reduces v against the stored rows. Returns the coefficients c with
	/// v_in = residual + sum c[pivot] * row[pivot].
	std::map<Key, Scalar, Compare> reduce(Vector &v) const
	{
		std::map<Key, Scalar, Compare> used;
		// The residual only ever gains non-pivot keys, so one sweep suffices.
		for (auto it = v.begin(); it != v.end();) {
			auto row = rows_.find(it->first);
			if (row == rows_.end()) {
				++it;
				continue;
			}
			Scalar c = it->second;
			Key key = it->first;
			used.emplace(key, c);
			axpy(v, -c, row->second.vector);
			it = v.upper_bound(key);
		}
		return used;
	}

	/// Adds v to the span. Returns false when v already lies in it.
	bool insert(Vector v)
	{
		auto used = reduce(v);
		if (v.empty())
			return false;
		Combination combination{{accepted_, Scalar::one(v.begin()->second.field())}};
		for (const auto &[key, c] : used)
			axpy_combination(combination, -c, rows_.at(key).combination);
		Scalar scale = v.begin()->second.inverse();
		for (auto &[key, value] : v)
			value *= scale;
		for (auto &[key, value] : combination)
			value *= scale;
		const Key pivot = v.begin()->first;
		for (auto &[key, row] : rows_) {
			auto hit = row.vector.find(pivot);
			if (hit == row.vector.end())
				continue;
			Scalar c = hit->second;
			axpy(row.vector, -c, v);
			axpy_combination(row.combination, -c, combination);
		}
		rows_.emplace(pivot, Row{std::move(v), std::move(combination)});
		++accepted_;
		return true;
	}

	bool contains(Vector v) const
	{
		reduce(v);
		return v.empty();
	}

	/// Coefficients of v over the accepted insertions, or nothing when v is
	/// outside the span.
	std::optional<Combination> express(Vector v) const
	{
		auto used = reduce(v);
		if (!v.empty())
			return std::nullopt;
		Combination out;
		for (const auto &[key, c] : used)
			axpy_combination(out, c, rows_.at(key).combination);
		return out;
	}

	std::size_t rank() const noexcept { return rows_.size(); }
	const std::map<Key, Row, Compare> &rows() const noexcept { return rows_; }

private:
	static void axpy_combination(Combination &y, const Scalar &a, const Combination &x)
	{
		for (const auto &[key, value] : x) {
			auto [it, inserted] = y.try_emplace(key, a * value);
			if (!inserted) {
				it->second += a * value;
				if (it->second.is_zero())
					y.erase(it);
			}
		}
	}

	std::map<Key, Row, Compare> rows_;
	std::size_t accepted_ = 0;
};

/// Dense matrix over k, used for the finite-dimensional augmentation blocks.
class Matrix
{
public:
	Matrix(std::size_t rows, std::size_t cols, const FieldSpec &field);
	static Matrix identity(std::size_t n, const FieldSpec &field);

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }
	const FieldSpec &field() const noexcept { return field_; }

	Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	std::size_t rank() const;
	/// Gauss-Jordan inverse; nothing when singular.
	std::optional<Matrix> inverse() const;

	friend Matrix operator*(const Matrix &a, const Matrix &b);
	friend Matrix operator+(const Matrix &a, const Matrix &b);
	friend bool operator==(const Matrix &a, const Matrix &b);

	std::string to_string() const;

private:
	std::size_t rows_;
	std::size_t cols_;
	FieldSpec field_;
	std::vector<Scalar> data_;
};

} // namespace pointed
