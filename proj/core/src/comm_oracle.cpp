#include "pointed/comm_oracle.hpp"
#include "pointed/error.hpp"
#include "pointed/expression.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace pointed::oracle {

std::size_t total_degree(const Exponent &e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

Polynomial Polynomial::constant(std::size_t variables, const mpq_class &c)
{
	Polynomial out(variables);
	out.set(Exponent(variables, 0), c);
	return out;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t a)
{
	if (a == 0 || a > variables)
		throw InvalidArgument(fmt::format("variable x{} out of range 1..{}", a, variables));
	Exponent e(variables, 0);
	e[a - 1] = 1;
	Polynomial out(variables);
	out.set(e, 1);
	return out;
}

namespace {

struct PolySemantics
{
	std::size_t variables;

	Polynomial number(const mpq_class &q) const { return Polynomial::constant(variables, q); }
	Polynomial idempotent(std::size_t) const
	{
		throw InvalidArgument("e(i) is not allowed in a commutative polynomial");
	}
	Polynomial arrow(std::size_t, std::size_t, std::size_t) const
	{
		throw InvalidArgument("t(i,j,l) is not allowed in a commutative polynomial");
	}
	Polynomial name(const std::string &n) const
	{
		if (n.size() < 2 || n[0] != 'x' || !std::all_of(n.begin() + 1, n.end(), ::isdigit))
			throw UnboundName(n);
		return Polynomial::variable(variables, std::stoul(n.substr(1)));
	}
	Polynomial inverse(const Polynomial &) const
	{
		throw InvalidArgument("inv() is not allowed in a polynomial");
	}
	Polynomial one() const { return Polynomial::constant(variables, 1); }
};

} // namespace

Polynomial Polynomial::parse(std::string_view source, std::size_t variables)
{
	PolySemantics sem{variables};
	return pointed::evaluate<Polynomial>(pointed::parse(source), sem);
}

mpq_class Polynomial::coefficient(const Exponent &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::set(const Exponent &e, const mpq_class &c)
{
	if (e.size() != variables_)
		throw InvalidArgument("exponent length does not match variable count");
	if (c == 0)
		terms_.erase(e);
	else
		terms_[e] = c;
}

std::size_t Polynomial::degree() const
{
	std::size_t d = 0;
	for (const auto &[e, c] : terms_)
		d = std::max(d, total_degree(e));
	return d;
}

mpq_class Polynomial::evaluate(const Point &p) const
{
	if (p.size() != variables_)
		throw InvalidArgument("point has the wrong number of coordinates");
	mpq_class out = 0;
	for (const auto &[e, c] : terms_) {
		mpq_class term = c;
		for (std::size_t a = 0; a < variables_; ++a)
			for (std::size_t k = 0; k < e[a]; ++k)
				term *= p[a];
		out += term;
	}
	return out;
}

Polynomial Polynomial::truncate(std::size_t n) const
{
	Polynomial out(variables_);
	for (const auto &[e, c] : terms_)
		if (total_degree(e) <= n)
			out.terms_.emplace(e, c);
	return out;
}

Polynomial Polynomial::operator-() const
{
	Polynomial out = *this;
	for (auto &[e, c] : out.terms_)
		c = -c;
	return out;
}

Polynomial Polynomial::operator+(const Polynomial &o) const
{
	if (o.variables_ != variables_)
		throw InvalidArgument("polynomials in different variable counts");
	Polynomial out = *this;
	for (const auto &[e, c] : o.terms_)
		out.set(e, out.coefficient(e) + c);
	return out;
}

Polynomial Polynomial::operator-(const Polynomial &o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial &o) const
{
	if (o.variables_ != variables_)
		throw InvalidArgument("polynomials in different variable counts");
	Polynomial out(variables_);
	for (const auto &[e1, c1] : terms_)
		for (const auto &[e2, c2] : o.terms_) {
			Exponent e(variables_);
			for (std::size_t a = 0; a < variables_; ++a)
				e[a] = e1[a] + e2[a];
			out.set(e, out.coefficient(e) + c1 * c2);
		}
	return out;
}

std::string Polynomial::to_string(const std::vector<std::string> &names) const
{
	if (terms_.empty())
		return "0";
	std::vector<std::pair<Exponent, mpq_class>> sorted(terms_.begin(), terms_.end());
	std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
		auto da = total_degree(a.first), db = total_degree(b.first);
		if (da != db)
			return da < db;
		return a.first > b.first;
	});
	std::string out;
	for (const auto &[e, c] : sorted) {
		std::vector<std::string> factors;
		for (std::size_t a = 0; a < variables_; ++a) {
			if (e[a] == 0)
				continue;
			std::string v = a < names.size() ? names[a] : fmt::format("x{}", a + 1);
			factors.push_back(e[a] == 1 ? v : fmt::format("{}^{}", v, e[a]));
		}
		mpq_class mag = abs(c);
		if (mag != 1 || factors.empty())
			factors.insert(factors.begin(), mag.get_str());
		std::string body = fmt::format("{}", fmt::join(factors, "*"));
		if (out.empty())
			out = (c < 0 ? "-" : "") + body;
		else
			out += (c < 0 ? " - " : " + ") + body;
	}
	return out;
}

Polynomial taylor_expand(const Polynomial &f, const Point &p, std::size_t n)
{
	const std::size_t vars = f.variables();
	if (p.size() != vars)
		throw InvalidArgument("point has the wrong number of coordinates");
	// x_a = p_a + u_a, expanded by repeated multiplication.
	std::vector<Polynomial> shifted;
	for (std::size_t a = 0; a < vars; ++a)
		shifted.push_back(Polynomial::constant(vars, p[a]) + Polynomial::variable(vars, a + 1));
	Polynomial out(vars);
	for (const auto &[e, c] : f.terms()) {
		Polynomial term = Polynomial::constant(vars, c);
		for (std::size_t a = 0; a < vars; ++a)
			for (std::size_t k = 0; k < e[a]; ++k)
				term = (term * shifted[a]).truncate(n);
		out = out + term;
	}
	return out.truncate(n);
}

Polynomial series_multiply(const Polynomial &a, const Polynomial &b, std::size_t n)
{
	return (a.truncate(n) * b.truncate(n)).truncate(n);
}

Polynomial taylor_invert(const Polynomial &f, const Point &p, std::size_t n)
{
	const std::size_t vars = f.variables();
	Polynomial g = taylor_expand(f, p, n);
	const Exponent origin(vars, 0);
	const mpq_class c0 = g.coefficient(origin);
	if (c0 == 0)
		throw PreconditionFailure("f vanishes at the point; no inverse series");

	// Exponents of total degree <= n, in order of increasing degree.
	std::vector<Exponent> monomials{origin};
	for (std::size_t d = 1; d <= n; ++d) {
		std::set<Exponent> next;
		for (const auto &e : monomials)
			if (total_degree(e) == d - 1)
				for (std::size_t a = 0; a < vars; ++a) {
					Exponent f2 = e;
					++f2[a];
					next.insert(f2);
				}
		monomials.insert(monomials.end(), next.begin(), next.end());
	}

	// (g h)_m = 0 for m != 0 gives h_m = -(1/c0) sum_{0 != k <= m} g_k h_{m-k}.
	Polynomial h(vars);
	h.set(origin, 1 / c0);
	for (std::size_t i = 1; i < monomials.size(); ++i) {
		const Exponent &m = monomials[i];
		mpq_class acc = 0;
		for (const auto &[k, gk] : g.terms()) {
			if (k == origin)
				continue;
			Exponent rest(vars);
			bool fits = true;
			for (std::size_t a = 0; a < vars && fits; ++a) {
				fits = k[a] <= m[a];
				if (fits)
					rest[a] = m[a] - k[a];
			}
			if (fits)
				acc += gk * h.coefficient(rest);
		}
		h.set(m, -acc / c0);
	}
	return h;
}

// ---------------------------------------------------------------------------

std::vector<std::string> CommutativeModel::generator_names() const
{
	std::vector<std::string> out;
	for (std::size_t a = 1; a <= variables; ++a)
		out.push_back(fmt::format("x{}", a));
	return out;
}

AlgebraPresentation CommutativeModel::presentation(std::vector<Expression> invert_hints) const
{
	AlgebraPresentation p;
	p.ambient = ambient;
	p.generators = generator_names();
	p.rho = rho;
	for (std::size_t a = 0; a < variables; ++a)
		for (std::size_t b = a + 1; b < variables; ++b) {
			auto xa = expr::name(p.generators[a]), xb = expr::name(p.generators[b]);
			p.relators.push_back(expr::sub(expr::mul(xa, xb), expr::mul(xb, xa)));
		}
	p.invert_hints = std::move(invert_hints);
	return p;
}

EndElement CommutativeModel::image(const Polynomial &f) const
{
	if (f.variables() != variables)
		throw InvalidArgument("polynomial has the wrong number of variables");
	const FieldSpec field = algebra->field();
	EndElement out = ambient->zero();
	for (const auto &[e, c] : f.terms()) {
		EndElement term = Scalar::from_rational(c, field) * ambient->identity();
		for (std::size_t a = 0; a < variables; ++a)
			for (std::size_t k = 0; k < e[a]; ++k)
				term = term * rho[a];
		out = out + term;
	}
	return out;
}

Polynomial CommutativeModel::component(const EndElement &x, std::size_t i) const
{
	const Element &block = x.entry(i, i);
	const Quiver &quiver = algebra->quiver();
	Polynomial out(variables);
	for (const auto &[path, c] : block.terms()) {
		Exponent e(variables, 0);
		for (auto idx : path.arrows())
			++e[quiver.arrow(idx).label - 1];
		out.set(e, out.coefficient(e) + c.rational());
	}
	return out;
}

EndElement CommutativeModel::from_components(const std::vector<Polynomial> &components) const
{
	if (components.size() != points.size())
		throw InvalidArgument("one component per point is required");
	const Quiver &quiver = algebra->quiver();
	Terms terms;
	for (std::size_t i = 0; i < points.size(); ++i) {
		const auto v = std::uint32_t(i + 1);
		std::map<Exponent, Path> normal;
		for (const Path &path : algebra->monomial_basis(v, v)) {
			Exponent e(variables, 0);
			for (auto idx : path.arrows())
				++e[quiver.arrow(idx).label - 1];
			normal.emplace(e, path);
		}
		for (const auto &[e, c] : components[i].terms()) {
			if (total_degree(e) > order)
				continue;
			terms[normal.at(e)] = Scalar::from_rational(c, algebra->field());
		}
	}
	return ambient->embed(Element(algebra, std::move(terms)));
}

CommutativeModel build_commutative_model(std::size_t variables, std::vector<Point> points,
                                         std::size_t order)
{
	if (points.empty())
		throw InvalidArgument("at least one point is required");
	for (const auto &p : points)
		if (p.size() != variables)
			throw InvalidArgument(fmt::format("points need {} coordinates", variables));
	for (std::size_t i = 0; i < points.size(); ++i)
		for (std::size_t j = 0; j < i; ++j)
			if (points[i] == points[j])
				throw InvalidArgument(fmt::format("points {} and {} coincide", j + 1, i + 1));

	const std::size_t r = points.size();
	std::vector<Arrow> arrows;
	for (std::uint32_t i = 1; i <= r; ++i)
		for (std::uint32_t a = 1; a <= variables; ++a)
			arrows.push_back({i, i, a});
	Quiver quiver(r, arrows);
	const FieldSpec field = FieldSpec::rationals();
	const Scalar one = Scalar::one(field);

	RelationSet relations;
	for (std::uint32_t i = 1; i <= r; ++i)
		for (std::uint32_t a = 1; a <= variables; ++a)
			for (std::uint32_t b = a + 1; b <= variables; ++b) {
				auto ta = *quiver.find({i, i, a}), tb = *quiver.find({i, i, b});
				Terms rel;
				rel[Path::from_arrows(quiver, {std::uint32_t(ta), std::uint32_t(tb)})] = one;
				rel[Path::from_arrows(quiver, {std::uint32_t(tb), std::uint32_t(ta)})] = -one;
				relations.push_back(std::move(rel));
			}

	CommutativeModel model;
	model.variables = variables;
	model.order = order;
	model.algebra = TruncatedAlgebra::build(quiver, field, order, relations);
	model.ambient = EndAlgebra::build(model.algebra, std::vector<std::size_t>(r, 1));
	for (std::uint32_t a = 1; a <= variables; ++a) {
		Element g = model.algebra->zero();
		for (std::uint32_t i = 1; i <= r; ++i) {
			g += Scalar::from_rational(points[i - 1][a - 1], field) * model.algebra->idempotent(i);
			if (order >= 1)
				g += model.algebra->arrow(i, i, a);
		}
		model.rho.push_back(model.ambient->embed(g));
	}
	model.points = std::move(points);
	return model;
}

TaylorVerdict compare_with_taylor(const CommutativeModel &model, const Polynomial &f)
{
	TaylorVerdict v;
	const EndElement image = model.image(f);

	v.components_match = true;
	for (std::size_t i = 0; i < model.points.size(); ++i) {
		if (!(model.component(image, i) == taylor_expand(f, model.points[i], model.order)))
			v.components_match = false;
		if (f.evaluate(model.points[i]) == 0)
			v.vanishing_expected.push_back(i + 1);
	}
	v.unit_expected = v.vanishing_expected.empty();

	const Classification c = end_classify(image);
	v.unit_classified = c.is_unit();
	v.vanishing_reported = c.vanishing;

	if (v.unit_expected && v.unit_classified) {
		const EndElement inverse = end_invert(image);
		for (std::size_t i = 0; i < model.points.size(); ++i)
			if (!(model.component(inverse, i) == taylor_invert(f, model.points[i], model.order)))
				v.inverse_match = false;
	}
	return v;
}

} // namespace pointed::oracle
