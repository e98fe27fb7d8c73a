#pragma once

#include "pointed/error.hpp"
#include "pointed/path_algebra.hpp"

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pointed {

struct Node;
using Expression = std::shared_ptr<const Node>;

/// Syntax tree of the element grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := number | 'e(' i ')' | 't(' i ',' j ',' l ')' | 'inv(' expr ')'
///            | name | '(' expr ')'
///
/// Numbers are exact: "7", "3/2".
struct Node
{
	enum class Kind
	{
		Number,
		Idempotent,
		Arrow,
		Name,
		Add,
		Sub,
		Mul,
		Neg,
		Inv,
		Pow
	};

	Kind kind = Kind::Number;
	mpq_class number{};
	std::array<std::size_t, 3> indices{};
	std::string name{};
	std::vector<Expression> children{};
	std::size_t exponent = 0;
	std::size_t line = 0;
	std::size_t column = 0;
};

namespace expr {

Expression number(const mpq_class &value);
Expression idempotent(std::size_t vertex);
Expression arrow(std::size_t source, std::size_t target, std::size_t label);
Expression name(std::string name);
Expression add(Expression a, Expression b);
Expression sub(Expression a, Expression b);
Expression mul(Expression a, Expression b);
Expression neg(Expression a);
Expression inv(Expression a);
Expression pow(Expression a, std::size_t exponent);

} // namespace expr

/// Throws ParseError with 1-based line and column.
Expression parse(std::string_view source);

/// Tree form, e.g. "add(e(1), scale(3/2, t(1,2,1)))".
std::string describe(const Expression &e);
/// Fully parenthesized source text that parses back to the same tree shape.
std::string to_source(const Expression &e);

std::set<std::string> free_names(const Expression &e);

/// Folds an expression with user-supplied semantics. `Semantics` provides
/// number, idempotent, arrow, name, inverse and one; T supplies + - * and
/// unary minus.
template <class T, class Semantics>
T evaluate(const Expression &e, Semantics &sem)
{
	switch (e->kind) {
	case Node::Kind::Number:
		return sem.number(e->number);
	case Node::Kind::Idempotent:
		return sem.idempotent(e->indices[0]);
	case Node::Kind::Arrow:
		return sem.arrow(e->indices[0], e->indices[1], e->indices[2]);
	case Node::Kind::Name:
		return sem.name(e->name);
	case Node::Kind::Add:
		return evaluate<T>(e->children[0], sem) + evaluate<T>(e->children[1], sem);
	case Node::Kind::Sub:
		return evaluate<T>(e->children[0], sem) - evaluate<T>(e->children[1], sem);
	case Node::Kind::Mul:
		return evaluate<T>(e->children[0], sem) * evaluate<T>(e->children[1], sem);
	case Node::Kind::Neg:
		return -evaluate<T>(e->children[0], sem);
	case Node::Kind::Inv:
		return sem.inverse(evaluate<T>(e->children[0], sem));
	case Node::Kind::Pow: {
		T base = evaluate<T>(e->children[0], sem);
		T out = sem.one();
		for (std::size_t i = 0; i < e->exponent; ++i)
			out = out * base;
		return out;
	}
	}
	throw Error("corrupt expression node");
}

using ElementBindings = std::map<std::string, Element>;

/// Evaluates in a truncated algebra; inv() uses the geometric-series
/// inverse and reports non-units with their vanishing set.
Element eval(const Expression &e, const AlgebraHandle &algebra, const ElementBindings &names = {});
Element eval(std::string_view source, const AlgebraHandle &algebra,
             const ElementBindings &names = {});

/// parse(x.to_string()) evaluates back to x.
bool round_trip(const Element &x);

} // namespace pointed
