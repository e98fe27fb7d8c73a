#include "pointed/linalg.hpp"

#include <fmt/format.h>

namespace pointed {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec &field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field))
{}

Matrix Matrix::identity(std::size_t n, const FieldSpec &field)
{
	Matrix m(n, n, field);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = Scalar::one(field);
	return m;
}

namespace {

// Row reduces `m` in place (optionally mirroring operations on `aug`),
// returning the rank.
std::size_t gauss_jordan(Matrix &m, Matrix *aug)
{
	std::size_t rank = 0;
	for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
		std::size_t pivot = rank;
		while (pivot < m.rows() && m(pivot, col).is_zero())
			++pivot;
		if (pivot == m.rows())
			continue;
		if (pivot != rank) {
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m(pivot, j), m(rank, j));
			if (aug)
				for (std::size_t j = 0; j < aug->cols(); ++j)
					std::swap((*aug)(pivot, j), (*aug)(rank, j));
		}
		Scalar scale = m(rank, col).inverse();
		for (std::size_t j = 0; j < m.cols(); ++j)
			m(rank, j) *= scale;
		if (aug)
			for (std::size_t j = 0; j < aug->cols(); ++j)
				(*aug)(rank, j) *= scale;
		for (std::size_t i = 0; i < m.rows(); ++i) {
			if (i == rank || m(i, col).is_zero())
				continue;
			Scalar c = m(i, col);
			for (std::size_t j = 0; j < m.cols(); ++j)
				m(i, j) -= c * m(rank, j);
			if (aug)
				for (std::size_t j = 0; j < aug->cols(); ++j)
					(*aug)(i, j) -= c * (*aug)(rank, j);
		}
		++rank;
	}
	return rank;
}

} // namespace

std::size_t Matrix::rank() const
{
	Matrix copy = *this;
	return gauss_jordan(copy, nullptr);
}

std::optional<Matrix> Matrix::inverse() const
{
	if (rows_ != cols_)
		throw InvalidArgument("inverse of a non-square matrix");
	Matrix copy = *this;
	Matrix inv = identity(rows_, field_);
	if (gauss_jordan(copy, &inv) != rows_)
		return std::nullopt;
	return inv;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
	if (a.cols_ != b.rows_)
		throw InvalidArgument("matrix shape mismatch");
	Matrix c(a.rows_, b.cols_, a.field_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k) {
			if (a(i, k).is_zero())
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				c(i, j) += a(i, k) * b(k, j);
		}
	return c;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw InvalidArgument("matrix shape mismatch");
	Matrix c = a;
	for (std::size_t i = 0; i < c.data_.size(); ++i)
		c.data_[i] += b.data_[i];
	return c;
}

bool operator==(const Matrix &a, const Matrix &b)
{
	return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const
{
	std::string out = "[";
	for (std::size_t i = 0; i < rows_; ++i) {
		out += i ? ", [" : "[";
		for (std::size_t j = 0; j < cols_; ++j)
			out += (j ? ", " : "") + (*this)(i, j).to_string();
		out += "]";
	}
	return out + "]";
}

} // namespace pointed
