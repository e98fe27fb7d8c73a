#include "pointed/pointed.hpp"
#include "pointed/error.hpp"

#include <fmt/format.h>

namespace pointed {

AugmentationValue augment(const Element &x)
{
	const auto &algebra = *x.algebra();
	AugmentationValue alpha;
	alpha.reserve(algebra.vertices());
	for (std::uint32_t v = 1; v <= algebra.vertices(); ++v)
		alpha.push_back(x.coefficient(Path::trivial(v)));
	return alpha;
}

Element lift(const TruncatedAlgebra &algebra, const AugmentationValue &alpha)
{
	if (alpha.size() != algebra.vertices())
		throw InvalidArgument("augmentation value has the wrong length");
	Element out = algebra.zero();
	for (std::size_t i = 0; i < alpha.size(); ++i)
		out += alpha[i] * algebra.idempotent(i + 1);
	return out;
}

bool in_maximal_ideal(const Element &x, std::size_t i)
{
	const std::size_t r = x.algebra()->vertices();
	if (i < 1 || i > r)
		throw InvalidArgument(fmt::format("maximal ideal index {} outside [1, {}]", i, r));
	return x.coefficient(Path::trivial(std::uint32_t(i))).is_zero();
}

Classification classify(const Element &x)
{
	Classification out;
	const auto alpha = augment(x);
	for (std::size_t i = 0; i < alpha.size(); ++i)
		if (alpha[i].is_zero())
			out.vanishing.push_back(i + 1);
	return out;
}

namespace {

struct Split
{
	Element inverse_lift; // rho(alpha^-1)
	Element nilpotent;    // n = rho(alpha) - x
};

Split split(const Element &x)
{
	auto c = classify(x);
	if (!c.is_unit())
		throw NonUnitError(c.vanishing);
	const auto &algebra = *x.algebra();
	auto alpha = augment(x);
	AugmentationValue inverse;
	for (const auto &a : alpha)
		inverse.push_back(a.inverse());
	return {lift(algebra, inverse), lift(algebra, alpha) - x};
}

// sum_{i=0}^{N} m^i by Horner's rule.
Element geometric_series(const Element &m)
{
	const auto &algebra = *m.algebra();
	Element one = algebra.one();
	Element sum = one;
	for (std::size_t i = 0; i < algebra.order(); ++i)
		sum = one + m * sum;
	return sum;
}

} // namespace

Element right_inverse(const Element &x)
{
	auto [inverse_lift, n] = split(x);
	return geometric_series(inverse_lift * n) * inverse_lift;
}

Element left_inverse(const Element &x)
{
	auto [inverse_lift, n] = split(x);
	return inverse_lift * geometric_series(n * inverse_lift);
}

Element invert(const Element &x)
{
	Element u = right_inverse(x);
	Element one = x.algebra()->one();
	if (!(x * u == one) || !(u * x == one))
		throw Error("inversion self-check failed: product is not 1");
	return u;
}

AlgebraHandle tangent_algebra(const std::vector<std::vector<std::size_t>> &counts,
                              const FieldSpec &field)
{
	return build_algebra(Quiver::from_counts(counts), field, 1);
}

} // namespace pointed
