#include "pointed/end_algebra.hpp"
#include "pointed/error.hpp"

#include <fmt/format.h>

namespace pointed {

EndAlgebra::EndAlgebra(AlgebraHandle base, std::vector<std::size_t> dims)
    : base_(std::move(base)), dims_(std::move(dims))
{
	if (dims_.size() != base_->vertices())
		throw InvalidArgument(fmt::format("{} module dimensions given for {} vertices", dims_.size(),
		                                  base_->vertices()));
	for (std::size_t i = 0; i < dims_.size(); ++i) {
		if (dims_[i] == 0)
			throw InvalidArgument("module dimensions must be positive");
		offsets_.push_back(vertex_of_.size());
		vertex_of_.insert(vertex_of_.end(), dims_[i], i + 1);
	}
}

EndHandle EndAlgebra::build(AlgebraHandle base, std::vector<std::size_t> dims)
{
	return EndHandle(new EndAlgebra(std::move(base), std::move(dims)));
}

EndHandle build_end_algebra(AlgebraHandle base, std::vector<std::size_t> dims)
{
	return EndAlgebra::build(std::move(base), std::move(dims));
}

EndElement EndAlgebra::zero() const { return EndElement(shared_from_this()); }

EndElement EndAlgebra::identity() const
{
	std::vector<Element> entries(size() * size(), base_->zero());
	for (std::size_t i = 0; i < size(); ++i)
		entries[i * size() + i] = base_->idempotent(vertex_of_[i]);
	return EndElement(shared_from_this(), std::move(entries));
}

EndElement EndAlgebra::idempotent(std::size_t vertex) const
{
	if (vertex < 1 || vertex > vertices())
		throw InvalidArgument(fmt::format("vertex {} outside [1, {}]", vertex, vertices()));
	std::vector<Element> entries(size() * size(), base_->zero());
	for (std::size_t i = 0; i < size(); ++i)
		if (vertex_of_[i] == vertex)
			entries[i * size() + i] = base_->idempotent(vertex);
	return EndElement(shared_from_this(), std::move(entries));
}

EndElement EndAlgebra::lift(const BlockAugmentation &blocks) const
{
	if (blocks.size() != vertices())
		throw InvalidArgument("one augmentation block per vertex is required");
	std::vector<Element> entries(size() * size(), base_->zero());
	for (std::size_t v = 1; v <= vertices(); ++v) {
		const Matrix &m = blocks[v - 1];
		if (m.rows() != dims_[v - 1] || m.cols() != dims_[v - 1])
			throw InvalidArgument(fmt::format("augmentation block {} has the wrong shape", v));
		Element e = base_->idempotent(v);
		for (std::size_t a = 0; a < m.rows(); ++a)
			for (std::size_t b = 0; b < m.cols(); ++b)
				entries[(offset(v) + a) * size() + offset(v) + b] = m(a, b) * e;
	}
	return EndElement(shared_from_this(), std::move(entries));
}

EndElement EndAlgebra::embed(const Element &x) const
{
	if (size() != vertices())
		throw InvalidArgument("embedding H requires all module dimensions to be 1");
	std::vector<Element> entries(size() * size(), base_->zero());
	for (std::size_t i = 1; i <= vertices(); ++i)
		for (std::size_t j = 1; j <= vertices(); ++j)
			entries[(i - 1) * size() + j - 1] = base_->idempotent(i) * x * base_->idempotent(j);
	return EndElement(shared_from_this(), std::move(entries));
}

std::vector<Slot> EndAlgebra::slot_basis() const
{
	std::vector<Slot> out;
	for (std::size_t d = 0; d <= base_->order(); ++d) {
		auto paths = base_->monomial_basis(d);
		for (std::size_t row = 0; row < size(); ++row)
			for (std::size_t col = 0; col < size(); ++col)
				for (const Path &p : paths)
					if (p.source() == vertex_of_[row] && p.target() == vertex_of_[col])
						out.push_back({row, col, p});
	}
	return out;
}

std::size_t EndAlgebra::dimension() const { return slot_basis().size(); }

SlotVector EndAlgebra::coordinates(const EndElement &x) const
{
	SlotVector out;
	for (std::size_t row = 0; row < size(); ++row)
		for (std::size_t col = 0; col < size(); ++col)
			for (const auto &[p, c] : x.entry(row, col).terms())
				out.emplace(Slot{row, col, p}, c);
	return out;
}

EndElement EndAlgebra::from_coordinates(const SlotVector &v) const
{
	std::vector<Terms> terms(size() * size());
	for (const auto &[slot, c] : v)
		terms.at(slot.row * size() + slot.col).emplace(slot.path, c);
	std::vector<Element> entries;
	entries.reserve(terms.size());
	for (auto &t : terms)
		entries.emplace_back(base_, std::move(t));
	return EndElement(shared_from_this(), std::move(entries));
}

bool EndAlgebra::same_as(const EndAlgebra &other) const
{
	return this == &other || (dims_ == other.dims_ && base_->same_as(*other.base_));
}

// ---------------------------------------------------------------------------

EndElement::EndElement(EndHandle algebra)
    : algebra_(std::move(algebra)),
      entries_(algebra_->size() * algebra_->size(), algebra_->base()->zero())
{}

EndElement::EndElement(EndHandle algebra, std::vector<Element> entries)
    : algebra_(std::move(algebra)), entries_(std::move(entries))
{
	const std::size_t n = algebra_->size();
	if (entries_.size() != n * n)
		throw InvalidArgument(fmt::format("expected {} entries, got {}", n * n, entries_.size()));
	for (std::size_t row = 0; row < n; ++row)
		for (std::size_t col = 0; col < n; ++col) {
			const Element &e = entries_[row * n + col];
			if (!e.algebra()->same_as(*algebra_->base()))
				throw AlgebraMismatch("entry outside the base algebra");
			for (const auto &[p, c] : e.terms())
				if (p.source() != algebra_->vertex_of(row) || p.target() != algebra_->vertex_of(col))
					throw InvalidArgument(fmt::format(
					    "entry ({}, {}) must lie in e_{} H e_{}", row + 1, col + 1,
					    algebra_->vertex_of(row), algebra_->vertex_of(col)));
		}
}

const Element &EndElement::entry(std::size_t row, std::size_t col) const
{
	return entries_.at(row * algebra_->size() + col);
}

bool EndElement::is_zero() const
{
	for (const auto &e : entries_)
		if (!e.is_zero())
			return false;
	return true;
}

void EndElement::check_same(const EndElement &other) const
{
	if (algebra_ != other.algebra_ && !algebra_->same_as(*other.algebra_))
		throw AlgebraMismatch("endomorphisms of different algebras");
}

EndElement EndElement::operator-() const
{
	EndElement out = *this;
	for (auto &e : out.entries_)
		e = -e;
	return out;
}

EndElement &EndElement::operator+=(const EndElement &other)
{
	check_same(other);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		entries_[i] += other.entries_[i];
	return *this;
}

EndElement &EndElement::operator-=(const EndElement &other)
{
	check_same(other);
	for (std::size_t i = 0; i < entries_.size(); ++i)
		entries_[i] -= other.entries_[i];
	return *this;
}

EndElement operator*(const EndElement &a, const EndElement &b)
{
	a.check_same(b);
	const std::size_t n = a.algebra_->size();
	EndElement out(a.algebra_);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			const Element &x = a.entries_[i * n + j];
			if (x.is_zero())
				continue;
			for (std::size_t k = 0; k < n; ++k) {
				const Element &y = b.entries_[j * n + k];
				if (!y.is_zero())
					out.entries_[i * n + k] += x * y;
			}
		}
	return out;
}

EndElement operator*(const Scalar &c, const EndElement &x)
{
	EndElement out = x;
	for (auto &e : out.entries_)
		e = c * e;
	return out;
}

bool operator==(const EndElement &a, const EndElement &b)
{
	a.check_same(b);
	return a.entries_ == b.entries_;
}

std::string EndElement::to_string() const
{
	const std::size_t n = algebra_->size();
	std::string out = "[";
	for (std::size_t i = 0; i < n; ++i) {
		out += i ? ", [" : "[";
		for (std::size_t j = 0; j < n; ++j)
			out += (j ? ", " : "") + entries_[i * n + j].to_string();
		out += "]";
	}
	return out + "]";
}

// ---------------------------------------------------------------------------

EndElement end_multiply(const EndElement &x, const EndElement &y) { return x * y; }
EndElement end_add(const EndElement &x, const EndElement &y) { return x + y; }

EndElement end_truncate(const EndElement &x, std::size_t d)
{
	std::vector<Element> entries;
	for (const auto &e : x.entries())
		entries.push_back(truncate(e, d));
	return EndElement(x.algebra(), std::move(entries));
}

BlockAugmentation block_augment(const EndElement &x)
{
	const auto &alg = *x.algebra();
	BlockAugmentation out;
	for (std::size_t v = 1; v <= alg.vertices(); ++v) {
		const std::size_t d = alg.dims()[v - 1];
		Matrix m(d, d, alg.field());
		const Path e = Path::trivial(std::uint32_t(v));
		for (std::size_t a = 0; a < d; ++a)
			for (std::size_t b = 0; b < d; ++b)
				m(a, b) = x.entry(alg.offset(v) + a, alg.offset(v) + b).coefficient(e);
		out.push_back(std::move(m));
	}
	return out;
}

Classification end_classify(const EndElement &x)
{
	Classification out;
	auto blocks = block_augment(x);
	for (std::size_t i = 0; i < blocks.size(); ++i)
		if (blocks[i].rank() != blocks[i].rows())
			out.vanishing.push_back(i + 1);
	return out;
}

EndElement end_invert(const EndElement &x)
{
	const auto &alg = *x.algebra();
	auto blocks = block_augment(x);
	BlockAugmentation inverse;
	std::vector<std::size_t> singular;
	for (std::size_t i = 0; i < blocks.size(); ++i) {
		auto inv = blocks[i].inverse();
		if (!inv)
			singular.push_back(i + 1);
		else
			inverse.push_back(std::move(*inv));
	}
	if (!singular.empty())
		throw NonUnitError(std::move(singular));

	EndElement inverse_lift = alg.lift(inverse);
	EndElement m1 = inverse_lift * (alg.lift(blocks) - x);
	EndElement one = alg.identity();
	EndElement series = one;
	for (std::size_t i = 0; i < alg.base()->order(); ++i)
		series = one + m1 * series;
	EndElement u = series * inverse_lift;
	if (!(x * u == one) || !(u * x == one))
		throw Error("block inversion self-check failed: product is not the identity");
	return u;
}

EndElement push_along(const AlgebraMorphism &phi, const EndElement &x, const EndHandle &target)
{
	if (!x.algebra()->base()->same_as(*phi.source()))
		throw AlgebraMismatch("endomorphism is not over the morphism's source");
	if (!target->base()->same_as(*phi.target()) || target->dims() != x.algebra()->dims())
		throw AlgebraMismatch("target end algebra does not match the morphism");
	std::vector<Element> entries;
	for (const auto &e : x.entries())
		entries.push_back(phi(e));
	return EndElement(target, std::move(entries));
}

EndElement push_along(const AlgebraMorphism &phi, const EndElement &x)
{
	return push_along(phi, x, EndAlgebra::build(phi.target(), x.algebra()->dims()));
}

bool check_diagram(const std::vector<EndElement> &rho, const std::vector<BlockAugmentation> &eta)
{
	if (rho.size() != eta.size())
		throw InvalidArgument(
		    fmt::format("{} generator images but {} action tuples", rho.size(), eta.size()));
	for (std::size_t g = 0; g < rho.size(); ++g) {
		auto image = block_augment(rho[g]);
		if (image.size() != eta[g].size())
			throw InvalidArgument(fmt::format("generator {}: wrong number of module blocks", g + 1));
		for (std::size_t i = 0; i < image.size(); ++i) {
			if (image[i].rows() != eta[g][i].rows() || image[i].cols() != eta[g][i].cols())
				throw InvalidArgument(
				    fmt::format("generator {}: action on M_{} has the wrong shape", g + 1, i + 1));
			if (!(image[i] == eta[g][i]))
				return false;
		}
	}
	return true;
}

} // namespace pointed
