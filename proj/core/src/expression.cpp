#include "pointed/expression.hpp"
#include "pointed/pointed.hpp"

#include <fmt/format.h>

#include <cctype>
#include <functional>
#include <optional>

namespace pointed {

namespace expr {

namespace {

Expression make(Node node) { return std::make_shared<const Node>(std::move(node)); }

Expression unary(Node::Kind kind, Expression a)
{
	Node n{kind};
	n.children = {std::move(a)};
	return make(std::move(n));
}

Expression binary(Node::Kind kind, Expression a, Expression b)
{
	Node n{kind};
	n.children = {std::move(a), std::move(b)};
	return make(std::move(n));
}

} // namespace

Expression number(const mpq_class &value)
{
	Node n{Node::Kind::Number};
	n.number = value;
	n.number.canonicalize();
	return make(std::move(n));
}

Expression idempotent(std::size_t vertex)
{
	Node n{Node::Kind::Idempotent};
	n.indices = {vertex, 0, 0};
	return make(std::move(n));
}

Expression arrow(std::size_t source, std::size_t target, std::size_t label)
{
	Node n{Node::Kind::Arrow};
	n.indices = {source, target, label};
	return make(std::move(n));
}

Expression name(std::string name)
{
	Node n{Node::Kind::Name};
	n.name = std::move(name);
	return make(std::move(n));
}

Expression add(Expression a, Expression b) { return binary(Node::Kind::Add, a, b); }
Expression sub(Expression a, Expression b) { return binary(Node::Kind::Sub, a, b); }
Expression mul(Expression a, Expression b) { return binary(Node::Kind::Mul, a, b); }
Expression neg(Expression a) { return unary(Node::Kind::Neg, a); }
Expression inv(Expression a) { return unary(Node::Kind::Inv, a); }

Expression pow(Expression a, std::size_t exponent)
{
	Node n{Node::Kind::Pow};
	n.children = {std::move(a)};
	n.exponent = exponent;
	return make(std::move(n));
}

} // namespace expr

namespace {

struct Token
{
	enum class Kind
	{
		Number,
		Ident,
		Symbol,
		End
	};
	Kind kind;
	std::string text;
	std::size_t line;
	std::size_t column;
};

class Lexer
{
public:
	explicit Lexer(std::string_view source) : source_(source) {}

	std::vector<Token> run()
	{
		std::vector<Token> out;
		while (true) {
			skip_space();
			std::size_t line = line_, column = column_;
			if (pos_ >= source_.size()) {
				out.push_back({Token::Kind::End, "", line, column});
				return out;
			}
			char c = source_[pos_];
			if (std::isdigit(static_cast<unsigned char>(c))) {
				std::string text = digits();
				if (peek() == '/' && pos_ + 1 < source_.size() &&
				    std::isdigit(static_cast<unsigned char>(source_[pos_ + 1]))) {
					advance();
					text += '/' + digits();
				}
				out.push_back({Token::Kind::Number, text, line, column});
			} else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
				std::string text;
				while (pos_ < source_.size() &&
				       (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
					text += advance();
				out.push_back({Token::Kind::Ident, text, line, column});
			} else if (std::string_view("+-*^(),").find(c) != std::string_view::npos) {
				out.push_back({Token::Kind::Symbol, std::string(1, advance()), line, column});
			} else {
				throw ParseError(fmt::format("unexpected character '{}'", c), line, column);
			}
		}
	}

private:
	char peek() const { return pos_ < source_.size() ? source_[pos_] : '\0'; }

	char advance()
	{
		char c = source_[pos_++];
		if (c == '\n') {
			++line_;
			column_ = 1;
		} else {
			++column_;
		}
		return c;
	}

	std::string digits()
	{
		std::string out;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			out += advance();
		return out;
	}

	void skip_space()
	{
		while (pos_ < source_.size() && std::isspace(static_cast<unsigned char>(peek())))
			advance();
	}

	std::string_view source_;
	std::size_t pos_ = 0;
	std::size_t line_ = 1;
	std::size_t column_ = 1;
};

class Parser
{
public:
	explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

	Expression run()
	{
		auto e = expression();
		if (current().kind != Token::Kind::End)
			fail(fmt::format("unexpected '{}' after expression", current().text));
		return e;
	}

private:
	const Token &current() const { return tokens_[pos_]; }

	bool at_symbol(char c) const
	{
		return current().kind == Token::Kind::Symbol && current().text[0] == c;
	}

	[[noreturn]] void fail(const std::string &message) const
	{
		throw ParseError(message, current().line, current().column);
	}

	void expect(char c)
	{
		if (!at_symbol(c))
			fail(fmt::format("expected '{}'", c));
		++pos_;
	}

	Expression located(Expression e, const Token &at)
	{
		auto node = std::make_shared<Node>(*e);
		node->line = at.line;
		node->column = at.column;
		return node;
	}

	std::size_t integer()
	{
		const Token &t = current();
		if (t.kind != Token::Kind::Number || t.text.find('/') != std::string::npos)
			fail("expected a nonnegative integer");
		++pos_;
		try {
			return std::stoull(t.text);
		} catch (const std::exception &) {
			throw ParseError("integer out of range", t.line, t.column);
		}
	}

	Expression expression()
	{
		auto lhs = term();
		while (at_symbol('+') || at_symbol('-')) {
			const Token op = current();
			++pos_;
			auto rhs = term();
			lhs = located(op.text[0] == '+' ? expr::add(lhs, rhs) : expr::sub(lhs, rhs), op);
		}
		return lhs;
	}

	Expression term()
	{
		auto lhs = unary();
		while (at_symbol('*')) {
			const Token op = current();
			++pos_;
			lhs = located(expr::mul(lhs, unary()), op);
		}
		return lhs;
	}

	Expression unary()
	{
		if (at_symbol('-')) {
			const Token op = current();
			++pos_;
			return located(expr::neg(unary()), op);
		}
		return power();
	}

	Expression power()
	{
		auto base = primary();
		if (at_symbol('^')) {
			const Token op = current();
			++pos_;
			return located(expr::pow(base, integer()), op);
		}
		return base;
	}

	Expression primary()
	{
		const Token t = current();
		switch (t.kind) {
		case Token::Kind::Number: {
			++pos_;
			mpq_class q(t.text, 10);
			if (q.get_den() == 0)
				throw ParseError("zero denominator", t.line, t.column);
			q.canonicalize();
			return located(expr::number(q), t);
		}
		case Token::Kind::Ident: {
			++pos_;
			if (!at_symbol('('))
				return located(expr::name(t.text), t);
			if (t.text == "e") {
				expect('(');
				auto i = integer();
				expect(')');
				return located(expr::idempotent(i), t);
			}
			if (t.text == "t") {
				expect('(');
				auto i = integer();
				expect(',');
				auto j = integer();
				expect(',');
				auto l = integer();
				expect(')');
				return located(expr::arrow(i, j, l), t);
			}
			if (t.text == "inv") {
				expect('(');
				auto inner = expression();
				expect(')');
				return located(expr::inv(inner), t);
			}
			--pos_;
			fail(fmt::format("unknown function '{}'", t.text));
		}
		case Token::Kind::Symbol:
			if (t.text == "(") {
				++pos_;
				auto inner = expression();
				expect(')');
				return inner;
			}
			fail(fmt::format("unexpected '{}'", t.text));
		case Token::Kind::End:
			fail("unexpected end of input");
		}
		fail("unreachable");
	}

	std::vector<Token> tokens_;
	std::size_t pos_ = 0;
};

} // namespace

Expression parse(std::string_view source)
{
	return Parser(Lexer(source).run()).run();
}

std::string describe(const Expression &e)
{
	using K = Node::Kind;
	switch (e->kind) {
	case K::Number:
		return e->number.get_str();
	case K::Idempotent:
		return fmt::format("e({})", e->indices[0]);
	case K::Arrow:
		return fmt::format("t({},{},{})", e->indices[0], e->indices[1], e->indices[2]);
	case K::Name:
		return e->name;
	case K::Add:
		return fmt::format("add({}, {})", describe(e->children[0]), describe(e->children[1]));
	case K::Sub:
		return fmt::format("sub({}, {})", describe(e->children[0]), describe(e->children[1]));
	case K::Mul:
		return fmt::format("{}({}, {})", e->children[0]->kind == K::Number ? "scale" : "mul",
		                   describe(e->children[0]), describe(e->children[1]));
	case K::Neg:
		return fmt::format("neg({})", describe(e->children[0]));
	case K::Inv:
		return fmt::format("inv({})", describe(e->children[0]));
	case K::Pow:
		return fmt::format("pow({}, {})", describe(e->children[0]), e->exponent);
	}
	return "?";
}

namespace {

// Binding strength of the printed form: sums 1, products 2, negation 3,
// powers 4, atoms 5.
int level(const Expression &e)
{
	using K = Node::Kind;
	switch (e->kind) {
	case K::Add:
	case K::Sub:
		return 1;
	case K::Mul:
		return 2;
	case K::Neg:
		return 3;
	case K::Pow:
		return 4;
	case K::Number:
		return e->number.get_den() != 1 && sgn(e->number) > 0 ? 2 : 5;
	default:
		return 5;
	}
}

std::string source_at(const Expression &e, int min_level)
{
	std::string out = to_source(e);
	return level(e) < min_level ? "(" + out + ")" : out;
}

} // namespace

std::string to_source(const Expression &e)
{
	using K = Node::Kind;
	switch (e->kind) {
	case K::Number:
		return sgn(e->number) < 0 ? fmt::format("(-{})", mpq_class(-e->number).get_str())
		                          : e->number.get_str();
	case K::Idempotent:
	case K::Arrow:
	case K::Name:
		return describe(e);
	case K::Add:
		return fmt::format("{} + {}", source_at(e->children[0], 1), source_at(e->children[1], 2));
	case K::Sub:
		return fmt::format("{} - {}", source_at(e->children[0], 1), source_at(e->children[1], 2));
	case K::Mul:
		return fmt::format("{} * {}", source_at(e->children[0], 2), source_at(e->children[1], 3));
	case K::Neg:
		return fmt::format("-{}", source_at(e->children[0], 4));
	case K::Inv:
		return fmt::format("inv({})", to_source(e->children[0]));
	case K::Pow:
		return fmt::format("{}^{}", source_at(e->children[0], 5), e->exponent);
	}
	return "?";
}

std::set<std::string> free_names(const Expression &e)
{
	std::set<std::string> out;
	std::function<void(const Expression &)> walk = [&](const Expression &n) {
		if (n->kind == Node::Kind::Name)
			out.insert(n->name);
		for (const auto &c : n->children)
			walk(c);
	};
	walk(e);
	return out;
}

namespace {

struct ElementSemantics
{
	const AlgebraHandle &algebra;
	const ElementBindings &names;

	Element number(const mpq_class &q) const
	{
		return algebra->scalar(Scalar::from_rational(q, algebra->field()));
	}
	Element idempotent(std::size_t i) const { return algebra->idempotent(i); }
	Element arrow(std::size_t i, std::size_t j, std::size_t l) const
	{
		return algebra->arrow(i, j, l);
	}
	Element name(const std::string &n) const
	{
		auto it = names.find(n);
		if (it == names.end())
			throw UnboundName(n);
		return it->second;
	}
	Element inverse(const Element &x) const { return invert(x); }
	Element one() const { return algebra->one(); }
};

} // namespace

Element eval(const Expression &e, const AlgebraHandle &algebra, const ElementBindings &names)
{
	ElementSemantics sem{algebra, names};
	return evaluate<Element>(e, sem);
}

Element eval(std::string_view source, const AlgebraHandle &algebra, const ElementBindings &names)
{
	return eval(parse(source), algebra, names);
}

bool round_trip(const Element &x)
{
	return eval(x.to_string(), x.algebra()) == x;
}

} // namespace pointed
