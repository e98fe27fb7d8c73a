#pragma once

#include "pointed/comm_oracle.hpp"
#include "pointed/end_algebra.hpp"
#include "pointed/local_functions.hpp"
#include "pointed/expression.hpp"
#include "pointed/path_algebra.hpp"
#include "pointed/random.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace fixtures {

using namespace pointed;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec F(std::uint64_t p) { return FieldSpec::prime(p); }

inline AlgebraHandle free_algebra(const std::vector<std::vector<std::size_t>> &counts,
                                  std::size_t order, const FieldSpec &field = Q())
{
	return TruncatedAlgebra::build(Quiver::from_counts(counts), field, order);
}

/// Relations written in the element grammar, evaluated in the free algebra.
inline AlgebraHandle quotient(const std::vector<std::vector<std::size_t>> &counts,
                              std::size_t order, const std::vector<std::string> &relations,
                              const FieldSpec &field = Q())
{
	auto free = free_algebra(counts, order, field);
	RelationSet rels;
	for (const auto &r : relations)
		rels.push_back(eval(r, free).terms());
	return TruncatedAlgebra::build(Quiver::from_counts(counts), field, order, rels);
}

inline AlgebraHandle one_loop(std::size_t order, const FieldSpec &field = Q())
{
	return free_algebra({{1}}, order, field);
}

inline AlgebraHandle commuting_loops(std::size_t order, const FieldSpec &field = Q())
{
	return quotient({{2}}, order, {"t(1,1,1)*t(1,1,2) - t(1,1,2)*t(1,1,1)"}, field);
}

inline Element el(const AlgebraHandle &h, const std::string &source) { return eval(source, h); }

/// Entries given in the element grammar, row-major.
inline EndElement end_el(const EndHandle &e, const std::vector<std::string> &entries)
{
	std::vector<Element> out;
	for (const auto &s : entries)
		out.push_back(eval(s, e->base()));
	return EndElement(e, std::move(out));
}

/// Small algebras used by the property tests: free, quotient (homogeneous and
/// not), several vertex counts, both kinds of field.
inline std::vector<AlgebraHandle> property_suite()
{
	std::vector<AlgebraHandle> out;
	for (const FieldSpec &f : {Q(), F(5)}) {
		out.push_back(one_loop(4, f));
		out.push_back(free_algebra({{0, 1}, {1, 0}}, 3, f));
		out.push_back(free_algebra({{1, 2}, {1, 1}}, 3, f));
		out.push_back(free_algebra({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3, f));
		out.push_back(commuting_loops(4, f));
		out.push_back(quotient({{2}}, 4, {"t(1,1,1)^2 + t(1,1,2)^3"}, f));
		out.push_back(quotient({{1, 1}, {1, 1}}, 3,
		                       {"t(1,2,1)*t(2,1,1) - t(1,1,1)^2", "t(2,1,1)*t(1,2,1)"}, f));
		out.push_back(free_algebra({{0, 0}, {0, 0}}, 2, f));
	}
	return out;
}

/// Presentation with 1-2 random generators over a small ambient. Each
/// generator is shifted by the identity with probability 1/2; hints are a
/// random subset of the unit-valued expressions among g1 + 1, g1 - 1 and
/// g1*g2 + 2.
inline AlgebraPresentation random_presentation(Rng &rng)
{
	static const std::vector<std::pair<std::vector<std::vector<std::size_t>>, std::size_t>> shapes{
	    {{{1}}, 3}, {{{2}}, 2}, {{{0, 1}, {1, 0}}, 2}, {{{1, 1}, {0, 1}}, 2}, {{{1, 0}, {1, 1}}, 2}};
	const auto &[counts, order] = shapes[rng() % shapes.size()];
	const FieldSpec field = rng() % 2 ? Q() : F(3);
	auto base = free_algebra(counts, order, field);
	std::vector<std::size_t> dims(counts.size());
	for (auto &d : dims)
		d = 1 + rng() % 2;
	if (counts.size() == 2 && dims[0] == 2 && dims[1] == 2)
		dims[1] = 1;
	auto ambient = EndAlgebra::build(base, dims);

	AlgebraPresentation p;
	p.ambient = ambient;
	const std::size_t gens = 1 + rng() % 2;
	for (std::size_t g = 0; g < gens; ++g) {
		p.generators.push_back("g" + std::to_string(g + 1));
		EndElement x = random_end_element(ambient, rng, 3);
		if (rng() % 2)
			x = x + ambient->identity();
		p.rho.push_back(x);
	}
	std::vector<Expression> candidates{parse("g1 + 1"), parse("g1 - 1")};
	if (gens == 2)
		candidates.push_back(parse("g1*g2 + 2"));
	for (const auto &c : candidates)
		if (end_classify(p.image(c)).is_unit() && rng() % 2)
			p.invert_hints.push_back(c);
	return p;
}

/// Number of composable arrow sequences of length d, by brute force over
/// all arrow sequences.
inline std::size_t count_paths(const Quiver &q, std::size_t d)
{
	const std::size_t a = q.arrows().size();
	if (d == 0)
		return q.vertices();
	std::size_t total = 0;
	std::vector<std::size_t> seq(d, 0);
	while (true) {
		bool ok = a > 0;
		for (std::size_t i = 0; ok && i + 1 < d; ++i)
			ok = q.arrow(seq[i]).target == q.arrow(seq[i + 1]).source;
		total += ok ? 1 : 0;
		std::size_t k = 0;
		while (k < d && ++seq[k] == a)
			seq[k++] = 0;
		if (k == d || a == 0)
			break;
	}
	return total;
}

/// Polynomial in n variables with up to `terms` monomials of total degree
/// <= max_degree and small integer coefficients.
inline oracle::Polynomial random_polynomial(std::size_t n, std::size_t max_degree, std::size_t terms,
                                            Rng &rng)
{
	oracle::Polynomial f(n);
	for (std::size_t i = 0; i < terms; ++i) {
		oracle::Exponent e(n, 0);
		std::size_t budget = rng() % (max_degree + 1);
		for (std::size_t k = 0; k < budget; ++k)
			++e[rng() % n];
		f.set(e, f.coefficient(e) + mpq_class(long(rng() % 7) - 3));
	}
	return f;
}

/// r distinct points with coordinates in {-2, ..., 2} and halves.
inline std::vector<oracle::Point> random_points(std::size_t n, std::size_t r, Rng &rng)
{
	std::vector<oracle::Point> out;
	while (out.size() < r) {
		oracle::Point p(n);
		for (auto &c : p) {
			c = mpq_class(long(rng() % 9) - 4, 2);
			c.canonicalize();
		}
		if (std::find(out.begin(), out.end(), p) == out.end())
			out.push_back(p);
	}
	return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k)
{
	std::size_t out = 1;
	for (std::size_t i = 1; i <= k; ++i)
		out = out * (n - k + i) / i;
	return out;
}

} // namespace fixtures
