#include "pointed/local_functions.hpp"
#include "pointed/error.hpp"

#include <fmt/format.h>

namespace pointed {

namespace {

struct EndSemantics
{
	const EndHandle &ambient;
	const EndBindings &names;

	EndElement number(const mpq_class &q) const
	{
		return Scalar::from_rational(q, ambient->field()) * ambient->identity();
	}
	EndElement idempotent(std::size_t i) const { return ambient->idempotent(i); }
	EndElement arrow(std::size_t i, std::size_t j, std::size_t l) const
	{
		return ambient->embed(ambient->base()->arrow(i, j, l));
	}
	EndElement name(const std::string &n) const
	{
		auto it = names.find(n);
		if (it == names.end())
			throw UnboundName(n);
		return it->second;
	}
	EndElement inverse(const EndElement &x) const { return end_invert(x); }
	EndElement one() const { return ambient->identity(); }
};

} // namespace

EndElement eval_end(const Expression &e, const EndHandle &ambient, const EndBindings &names)
{
	EndSemantics sem{ambient, names};
	return evaluate<EndElement>(e, sem);
}

EndBindings AlgebraPresentation::bindings() const
{
	if (generators.size() != rho.size())
		throw PreconditionFailure(fmt::format("{} generators but {} images", generators.size(),
		                                      rho.size()));
	EndBindings out;
	for (std::size_t i = 0; i < generators.size(); ++i)
		out.emplace(generators[i], rho[i]);
	return out;
}

void validate(const AlgebraPresentation &p)
{
	auto names = p.bindings();
	if (names.size() != p.generators.size())
		throw PreconditionFailure("generator names must be distinct");
	for (const auto &g : p.rho)
		if (!g.algebra()->same_as(*p.ambient))
			throw PreconditionFailure("generator image outside the ambient algebra");
	for (const auto &rel : p.relators)
		if (!eval_end(rel, p.ambient, names).is_zero())
			throw PreconditionFailure(
			    fmt::format("relator {} does not vanish under rho", to_source(rel)));
	for (const auto &hint : p.invert_hints) {
		auto c = end_classify(eval_end(hint, p.ambient, names));
		if (!c.is_unit())
			throw NonUnitError(c.vanishing);
	}
}

// ---------------------------------------------------------------------------

SubalgebraBasis::SubalgebraBasis(EndHandle ambient) : ambient_(std::move(ambient)) {}

SubalgebraBasis SubalgebraBasis::span_of(EndHandle ambient, const std::vector<Seed> &elements)
{
	SubalgebraBasis out(std::move(ambient));
	for (const auto &s : elements)
		out.add(s.element, {Provenance::Kind::Seed, 0, s.expression});
	return out;
}

bool SubalgebraBasis::add(const EndElement &x, Provenance provenance)
{
	if (!x.algebra()->same_as(*ambient_))
		throw AlgebraMismatch("element outside the ambient algebra");
	if (!echelon_.insert(ambient_->coordinates(x)))
		return false;
	elements_.push_back(x);
	provenance_.push_back(std::move(provenance));
	return true;
}

Expression SubalgebraBasis::expression(std::size_t i) const
{
	const Provenance &p = provenance_.at(i);
	switch (p.kind) {
	case Provenance::Kind::Idempotent:
		return expr::idempotent(p.vertex);
	case Provenance::Kind::Seed:
		return p.expression;
	case Provenance::Kind::Product:
		return expr::mul(expression(p.left), expression(p.right));
	}
	throw Error("corrupt provenance");
}

std::vector<std::vector<EndElement>> SubalgebraBasis::by_degree() const
{
	std::vector<std::vector<EndElement>> out(ambient_->base()->order() + 1);
	for (const auto &[pivot, row] : echelon_.rows())
		out[pivot.path.length()].push_back(ambient_->from_coordinates(row.vector));
	return out;
}

std::vector<std::size_t> SubalgebraBasis::dimension_by_degree() const
{
	std::vector<std::size_t> out(ambient_->base()->order() + 1, 0);
	for (const auto &[pivot, row] : echelon_.rows())
		++out[pivot.path.length()];
	return out;
}

bool SubalgebraBasis::contains(const EndElement &x) const
{
	return echelon_.contains(ambient_->coordinates(x));
}

std::optional<std::vector<Scalar>> SubalgebraBasis::coordinates(const EndElement &x) const
{
	auto combination = echelon_.express(ambient_->coordinates(x));
	if (!combination)
		return std::nullopt;
	std::vector<Scalar> out(elements_.size(), Scalar::zero(ambient_->field()));
	for (const auto &[index, c] : *combination)
		out.at(index) = c;
	return out;
}

bool SubalgebraBasis::same_span(const SubalgebraBasis &other) const
{
	if (dimension() != other.dimension())
		return false;
	for (const auto &x : other.elements_)
		if (!contains(x))
			return false;
	return true;
}

// ---------------------------------------------------------------------------

SubalgebraBasis generated_subalgebra(const EndHandle &ambient, const std::vector<Seed> &seeds)
{
	SubalgebraBasis basis(ambient);
	for (std::size_t v = 1; v <= ambient->vertices(); ++v)
		basis.add(ambient->idempotent(v), {Provenance::Kind::Idempotent, v, nullptr});
	for (const auto &s : seeds)
		basis.add(s.element, {Provenance::Kind::Seed, 0, s.expression});

	// Every pair (j, k) with j <= k is multiplied once k is reached; new
	// elements get larger indices and are reached later.
	for (std::size_t k = 0; k < basis.dimension(); ++k) {
		for (std::size_t j = 0; j <= k; ++j) {
			EndElement left = basis.elements()[j] * basis.elements()[k];
			basis.add(left, {Provenance::Kind::Product, 0, nullptr, j, k});
			if (j != k) {
				EndElement right = basis.elements()[k] * basis.elements()[j];
				basis.add(right, {Provenance::Kind::Product, 0, nullptr, k, j});
			}
		}
	}
	return basis;
}

SubalgebraBasis local_function_ring(const AlgebraPresentation &p)
{
	validate(p);
	auto names = p.bindings();
	std::vector<Seed> seeds;
	for (std::size_t i = 0; i < p.generators.size(); ++i)
		seeds.push_back({p.rho[i], expr::name(p.generators[i])});
	for (const auto &hint : p.invert_hints)
		seeds.push_back({end_invert(eval_end(hint, p.ambient, names)), expr::inv(hint)});
	for (std::size_t i = 0; i < p.generators.size(); ++i)
		if (end_classify(p.rho[i]).is_unit())
			seeds.push_back({end_invert(p.rho[i]), expr::inv(expr::name(p.generators[i]))});
	return generated_subalgebra(p.ambient, seeds);
}

bool idempotence_check(const SubalgebraBasis &basis)
{
	std::vector<Seed> seeds;
	for (std::size_t i = 0; i < basis.dimension(); ++i) {
		const EndElement &x = basis.elements()[i];
		seeds.push_back({x, basis.expression(i)});
		if (end_classify(x).is_unit())
			seeds.push_back({end_invert(x), expr::inv(basis.expression(i))});
	}
	return generated_subalgebra(basis.ambient(), seeds).same_span(basis);
}

bool idempotence_check(const SubalgebraBasis &basis, const AlgebraPresentation &presentation)
{
	if (!basis.ambient()->same_as(*presentation.ambient))
		throw AlgebraMismatch("basis and presentation live in different ambients");
	return idempotence_check(basis);
}

InducedMorphism induced_morphism(const std::map<std::string, Expression> &phi,
                                 const AlgebraPresentation &source,
                                 const AlgebraPresentation &target,
                                 const std::optional<AlgebraMorphism> &base_map)
{
	if (!base_map && !source.ambient->same_as(*target.ambient))
		throw PreconditionFailure("different ambient algebras need a base algebra map");

	const auto target_names = target.bindings();
	EndBindings pushed;
	for (const auto &g : source.generators) {
		auto it = phi.find(g);
		if (it == phi.end())
			throw PreconditionFailure(fmt::format("no image given for generator '{}'", g));
		pushed.emplace(g, eval_end(it->second, target.ambient, target_names));
	}

	SubalgebraBasis source_basis = local_function_ring(source);
	std::vector<EndElement> images;
	for (std::size_t i = 0; i < source_basis.dimension(); ++i) {
		const Provenance &p = source_basis.provenance()[i];
		switch (p.kind) {
		case Provenance::Kind::Idempotent:
			images.push_back(target.ambient->idempotent(p.vertex));
			break;
		case Provenance::Kind::Seed:
			try {
				images.push_back(eval_end(p.expression, target.ambient, pushed));
			} catch (const NonUnitError &e) {
				throw PreconditionFailure(
				    fmt::format("{} maps to a non-unit (singular blocks {{{}}})",
				                to_source(p.expression), fmt::join(e.vanishing_set(), ", ")));
			}
			break;
		case Provenance::Kind::Product:
			images.push_back(images[p.left] * images[p.right]);
			break;
		}
	}

	for (std::size_t i = 0; i < source.generators.size(); ++i) {
		const auto &g = source.generators[i];
		EndElement expected = base_map ? push_along(*base_map, source.rho[i], target.ambient)
		                               : source.rho[i];
		if (!(expected == pushed.at(g)))
			throw PreconditionFailure(
			    fmt::format("incompatible presentations: rho differs on generator '{}'", g));
	}

	SubalgebraBasis target_basis = local_function_ring(target);
	InducedMorphism out{std::move(source_basis), std::move(target_basis), {}, {}, true};
	for (auto &image : images) {
		out.coordinates.push_back(out.target_basis.coordinates(image));
		out.contained = out.contained && out.coordinates.back().has_value();
		out.images.push_back(std::move(image));
	}
	return out;
}

bool self_completion_check(const AlgebraHandle &algebra, Rng &rng, std::size_t samples)
{
	auto end = EndAlgebra::build(algebra, std::vector<std::size_t>(algebra->vertices(), 1));

	std::vector<Slot> images;
	for (std::size_t d = 0; d <= algebra->order(); ++d) {
		for (const Path &p : algebra->monomial_basis(d)) {
			auto coords = end->coordinates(end->embed(algebra->monomial(p, Scalar::one(algebra->field()))));
			if (coords.size() != 1 || !coords.begin()->second.is_one())
				return false;
			images.push_back(coords.begin()->first);
		}
	}
	auto slots = end->slot_basis();
	if (images.size() != slots.size())
		return false;
	std::sort(images.begin(), images.end(), SlotOrder{});
	for (std::size_t i = 0; i < slots.size(); ++i)
		if (!(images[i] == slots[i]))
			return false;

	if (!(end->embed(algebra->one()) == end->identity()))
		return false;
	for (std::size_t s = 0; s < samples; ++s) {
		Element x = random_element(algebra, rng, 4);
		Element y = random_element(algebra, rng, 4);
		if (!(end->embed(x * y) == end->embed(x) * end->embed(y)))
			return false;
		if (!(end->embed(x + y) == end->embed(x) + end->embed(y)))
			return false;
	}
	return true;
}

} // namespace pointed
