#include "pointed/random.hpp"

namespace pointed {

Scalar random_scalar(const FieldSpec &field, Rng &rng, bool nonzero)
{
	while (true) {
		Scalar s = Scalar::zero(field);
		if (field.is_rational()) {
			long num = std::uniform_int_distribution<long>(-5, 5)(rng);
			long den = std::uniform_int_distribution<long>(1, 4)(rng);
			mpq_class q(num, den);
			q.canonicalize();
			s = Scalar::from_rational(q, field);
		} else {
			long r = std::uniform_int_distribution<long>(0, long(field.characteristic()) - 1)(rng);
			s = Scalar::from_int(r, field);
		}
		if (!nonzero || !s.is_zero())
			return s;
	}
}

Path random_path(const TruncatedAlgebra &algebra, Rng &rng, std::size_t max_length)
{
	const Quiver &quiver = algebra.quiver();
	auto start = std::uniform_int_distribution<std::uint32_t>(
	    1, std::uint32_t(quiver.vertices()))(rng);
	auto length = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
	Path p = Path::trivial(start);
	for (std::size_t k = 0; k < length; ++k) {
		const auto &out = quiver.outgoing(p.target());
		if (out.empty())
			break;
		auto pick = std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng);
		p = *p.concat(Path::arrow(quiver, out[pick]));
	}
	return p;
}

Element random_element(const AlgebraHandle &algebra, Rng &rng, std::size_t max_terms)
{
	auto count = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
	Terms terms;
	for (std::size_t i = 0; i < count; ++i)
		terms[random_path(*algebra, rng, algebra->order())] = random_scalar(algebra->field(), rng);
	return Element(algebra, std::move(terms));
}

Element random_unit(const AlgebraHandle &algebra, Rng &rng, std::size_t max_terms)
{
	Terms terms = random_element(algebra, rng, max_terms).terms();
	for (std::uint32_t v = 1; v <= algebra->vertices(); ++v)
		terms[Path::trivial(v)] = random_scalar(algebra->field(), rng, true);
	return Element(algebra, std::move(terms));
}

EndElement random_end_element(const EndHandle &algebra, Rng &rng, std::size_t max_terms)
{
	auto slots = algebra->slot_basis();
	auto count = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
	SlotVector v;
	if (!slots.empty())
		for (std::size_t i = 0; i < count; ++i) {
			auto pick = std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng);
			Scalar c = random_scalar(algebra->field(), rng);
			if (!c.is_zero())
				v[slots[pick]] = c;
		}
	return algebra->from_coordinates(v);
}

} // namespace pointed
