#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace pointed {

/// The ground field k: either Q or a prime field F_p with p <= 2^31.
class FieldSpec
{
public:
	enum class Kind
	{
		Rationals,
		PrimeField
	};

	static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
	static FieldSpec prime(std::uint64_t p);

	/// Parses "q" or "fp:<p>".
	static FieldSpec parse(std::string_view text);

	Kind kind() const noexcept { return kind_; }
	std::uint32_t characteristic() const noexcept { return p_; }
	bool is_rational() const noexcept { return kind_ == Kind::Rationals; }

	std::string to_string() const;

	friend bool operator==(const FieldSpec &, const FieldSpec &) = default;

private:
	friend class Scalar;
	FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

	Kind kind_;
	std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact element of k. Rationals are kept in lowest terms with a
/// positive denominator; residues in [0, p).
class Scalar
{
public:
	/// Zero of Q.
	Scalar() : value_(mpq_class(0)) {}

	static Scalar zero(const FieldSpec &field);
	static Scalar one(const FieldSpec &field);
	static Scalar from_int(long value, const FieldSpec &field);
	/// Maps a rational into `field`; throws DivisionByZero when the
	/// denominator vanishes mod p.
	static Scalar from_rational(const mpq_class &value, const FieldSpec &field);
	/// Parses "a", "-a" or "a/b".
	static Scalar parse(std::string_view text, const FieldSpec &field);

	FieldSpec field() const;
	bool is_zero() const;
	bool is_one() const;

	/// The rational value; only valid for Q.
	const mpq_class &rational() const;
	/// The residue; only valid for F_p.
	std::uint32_t residue() const;

	Scalar operator-() const;
	Scalar inverse() const;

	Scalar &operator+=(const Scalar &other);
	Scalar &operator-=(const Scalar &other);
	Scalar &operator*=(const Scalar &other);
	Scalar &operator/=(const Scalar &other);

	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
	friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

	/// Equality of canonical forms. Scalars over different fields compare
	/// unequal.
	friend bool operator==(const Scalar &a, const Scalar &b);

	std::string to_string() const;

private:
	struct Residue
	{
		std::uint32_t value;
		std::uint32_t p;
	};

	explicit Scalar(mpq_class q) : value_(std::move(q)) {}
	explicit Scalar(Residue r) : value_(r) {}

	void check_same_field(const Scalar &other) const;

	std::variant<mpq_class, Residue> value_;
};

Scalar scalar_add(const Scalar &a, const Scalar &b);
Scalar scalar_mul(const Scalar &a, const Scalar &b);
Scalar scalar_inv(const Scalar &a);

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace pointed
