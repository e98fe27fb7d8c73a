#pragma once

#include "pointed/end_algebra.hpp"
#include "pointed/local_functions.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pointed::oracle {

using Exponent = std::vector<std::size_t>;
using Point = std::vector<mpq_class>;

/// Commutative polynomial over Q in a fixed number of variables.
class Polynomial
{
public:
	explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
	static Polynomial constant(std::size_t variables, const mpq_class &c);
	/// x_a, 1-based.
	static Polynomial variable(std::size_t variables, std::size_t a);
	/// Commutative grammar: numbers, x1..xn, + - * ^ and parentheses.
	static Polynomial parse(std::string_view source, std::size_t variables);

	std::size_t variables() const noexcept { return variables_; }
	const std::map<Exponent, mpq_class> &terms() const noexcept { return terms_; }
	mpq_class coefficient(const Exponent &e) const;
	void set(const Exponent &e, const mpq_class &c);
	bool is_zero() const noexcept { return terms_.empty(); }
	std::size_t degree() const;

	mpq_class evaluate(const Point &p) const;
	/// Drops terms of total degree above n.
	Polynomial truncate(std::size_t n) const;

	Polynomial operator-() const;
	Polynomial operator+(const Polynomial &o) const;
	Polynomial operator-(const Polynomial &o) const;
	Polynomial operator*(const Polynomial &o) const;
	bool operator==(const Polynomial &o) const = default;

	/// In variables x1..xn, or `local` names (u, v, ...) when given.
	std::string to_string(const std::vector<std::string> &names = {}) const;

private:
	std::size_t variables_;
	std::map<Exponent, mpq_class> terms_;
};

std::size_t total_degree(const Exponent &e);

/// Coefficients of f(p + u) up to total degree n.
Polynomial taylor_expand(const Polynomial &f, const Point &p, std::size_t n);
/// Coefficients of 1/f at p up to total degree n, solved degree by degree.
/// Throws PreconditionFailure when f(p) = 0.
Polynomial taylor_invert(const Polynomial &f, const Point &p, std::size_t n);
/// Product truncated at total degree n.
Polynomial series_multiply(const Polynomial &a, const Polynomial &b, std::size_t n);

/**
 * H = direct sum of Q[[u_1..u_n]]/m^(N+1) realised as a quiver algebra: r
 * isolated vertices each carrying n commuting loops, with
 * rho(x_a) = sum_i (p_{i,a} e_i + t(i,i,a)) in End over dims (1, ..., 1).
 */
struct CommutativeModel
{
	std::size_t variables = 0;
	std::vector<Point> points;
	std::size_t order = 0;
	AlgebraHandle algebra;
	EndHandle ambient;
	std::vector<EndElement> rho;

	std::vector<std::string> generator_names() const;
	/// Presentation with generators x1..xn and commutator relators.
	AlgebraPresentation presentation(std::vector<Expression> invert_hints = {}) const;
	/// rho(f), computed through the ring operations of the ambient.
	EndElement image(const Polynomial &f) const;
	/// Local coordinates of the vertex-i block (0-based) of x.
	Polynomial component(const EndElement &x, std::size_t i) const;
	/// The element whose vertex-i block has the given local expansion.
	EndElement from_components(const std::vector<Polynomial> &components) const;
};

/// Throws InvalidArgument on duplicate points or wrong coordinate counts.
CommutativeModel build_commutative_model(std::size_t variables, std::vector<Point> points,
                                         std::size_t order);

struct TaylorVerdict
{
	bool components_match = false;
	/// f(p_i) != 0 at every point.
	bool unit_expected = false;
	bool unit_classified = false;
	std::vector<std::size_t> vanishing_expected;
	std::vector<std::size_t> vanishing_reported;
	/// Inverse blocks equal taylor_invert (vacuous when not a unit).
	bool inverse_match = true;

	bool pass() const
	{
		return components_match && unit_expected == unit_classified &&
		       vanishing_expected == vanishing_reported && inverse_match;
	}
};

TaylorVerdict compare_with_taylor(const CommutativeModel &model, const Polynomial &f);

} // namespace pointed::oracle
