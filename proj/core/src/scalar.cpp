#include "pointed/scalar.hpp"
#include "pointed/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <ostream>

namespace pointed {

NonUnitError::NonUnitError(std::vector<std::size_t> vanishing)
    : Error(fmt::format("not a unit: vanishes at {{{}}}", fmt::join(vanishing, ", "))),
      vanishing_(std::move(vanishing))
{}

ParseError::ParseError(const std::string &message, std::size_t line, std::size_t column)
    : Error(fmt::format("{}:{}: {}", line, column, message)), line_(line), column_(column)
{}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
	if (p > (std::uint64_t(1) << 31))
		throw InvalidArgument(fmt::format("characteristic {} exceeds 2^31", p));
	if (!is_prime(p))
		throw InvalidArgument(fmt::format("characteristic {} is not prime", p));
	return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text)
{
	if (text == "q" || text == "Q")
		return rationals();
	if (text.starts_with("fp:")) {
		auto digits = text.substr(3);
		std::uint64_t p = 0;
		auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
		if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
			return prime(p);
	}
	throw InvalidArgument(fmt::format("bad field '{}', expected q or fp:<p>", text));
}

std::string FieldSpec::to_string() const
{
	return is_rational() ? "q" : fmt::format("fp:{}", p_);
}

Scalar Scalar::zero(const FieldSpec &field) { return from_int(0, field); }

Scalar Scalar::one(const FieldSpec &field) { return from_int(1, field); }

Scalar Scalar::from_int(long value, const FieldSpec &field)
{
	if (field.is_rational())
		return Scalar(mpq_class(value));
	long p = field.characteristic();
	long r = value % p;
	if (r < 0)
		r += p;
	return Scalar(Residue{static_cast<std::uint32_t>(r), field.characteristic()});
}

Scalar Scalar::from_rational(const mpq_class &value, const FieldSpec &field)
{
	if (field.is_rational())
		return Scalar(value);
	mpz_class p(field.characteristic());
	mpz_class num = value.get_num() % p;
	mpz_class den = value.get_den() % p;
	if (num < 0)
		num += p;
	if (den == 0)
		throw DivisionByZero();
	Scalar n(Residue{static_cast<std::uint32_t>(num.get_ui()), field.characteristic()});
	Scalar d(Residue{static_cast<std::uint32_t>(den.get_ui()), field.characteristic()});
	return n / d;
}

Scalar Scalar::parse(std::string_view text, const FieldSpec &field)
{
	mpq_class q;
	std::string s(text);
	if (s.empty() || q.set_str(s, 10) != 0)
		throw InvalidArgument(fmt::format("bad scalar literal '{}'", text));
	if (q.get_den() == 0)
		throw DivisionByZero();
	q.canonicalize();
	return from_rational(q, field);
}

FieldSpec Scalar::field() const
{
	if (auto *r = std::get_if<Residue>(&value_))
		return FieldSpec(FieldSpec::Kind::PrimeField, r->p);
	return FieldSpec::rationals();
}

bool Scalar::is_zero() const
{
	if (auto *r = std::get_if<Residue>(&value_))
		return r->value == 0;
	return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const
{
	if (auto *r = std::get_if<Residue>(&value_))
		return r->value == 1;
	return std::get<mpq_class>(value_) == 1;
}

const mpq_class &Scalar::rational() const
{
	if (auto *q = std::get_if<mpq_class>(&value_))
		return *q;
	throw FieldMismatch("rational value requested from a prime-field scalar");
}

std::uint32_t Scalar::residue() const
{
	if (auto *r = std::get_if<Residue>(&value_))
		return r->value;
	throw FieldMismatch("residue requested from a rational scalar");
}

void Scalar::check_same_field(const Scalar &other) const
{
	auto *a = std::get_if<Residue>(&value_);
	auto *b = std::get_if<Residue>(&other.value_);
	if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
		throw FieldMismatch(fmt::format("scalars over {} and {}", field().to_string(),
		                                other.field().to_string()));
}

Scalar Scalar::operator-() const
{
	if (auto *r = std::get_if<Residue>(&value_))
		return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
	return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw DivisionByZero();
	if (auto *r = std::get_if<Residue>(&value_)) {
		// Fermat: a^(p-2)
		std::uint64_t base = r->value, result = 1, e = r->p - 2;
		while (e > 0) {
			if (e & 1)
				result = result * base % r->p;
			base = base * base % r->p;
			e >>= 1;
		}
		return Scalar(Residue{static_cast<std::uint32_t>(result), r->p});
	}
	return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar &Scalar::operator+=(const Scalar &other)
{
	check_same_field(other);
	if (auto *r = std::get_if<Residue>(&value_)) {
		std::uint64_t s = std::uint64_t(r->value) + std::get<Residue>(other.value_).value;
		r->value = static_cast<std::uint32_t>(s % r->p);
	} else {
		std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
	}
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &other) { return *this += -other; }

Scalar &Scalar::operator*=(const Scalar &other)
{
	check_same_field(other);
	if (auto *r = std::get_if<Residue>(&value_)) {
		std::uint64_t s = std::uint64_t(r->value) * std::get<Residue>(other.value_).value;
		r->value = static_cast<std::uint32_t>(s % r->p);
	} else {
		std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
	}
	return *this;
}

Scalar &Scalar::operator/=(const Scalar &other)
{
	check_same_field(other);
	return *this *= other.inverse();
}

bool operator==(const Scalar &a, const Scalar &b)
{
	auto *ra = std::get_if<Scalar::Residue>(&a.value_);
	auto *rb = std::get_if<Scalar::Residue>(&b.value_);
	if (ra && rb)
		return ra->p == rb->p && ra->value == rb->value;
	if (!ra && !rb)
		return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
	return false;
}

std::string Scalar::to_string() const
{
	if (auto *r = std::get_if<Residue>(&value_))
		return std::to_string(r->value);
	return std::get<mpq_class>(value_).get_str();
}

Scalar scalar_add(const Scalar &a, const Scalar &b) { return a + b; }
Scalar scalar_mul(const Scalar &a, const Scalar &b) { return a * b; }
Scalar scalar_inv(const Scalar &a) { return a.inverse(); }

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace pointed
