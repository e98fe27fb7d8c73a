#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pointed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
	virtual const char *kind() const noexcept { return "error"; }
};

class FieldMismatch : public Error
{
public:
	using Error::Error;
	const char *kind() const noexcept override { return "field_mismatch"; }
};

class DivisionByZero : public Error
{
public:
	DivisionByZero() : Error("division by zero") {}
	const char *kind() const noexcept override { return "division_by_zero"; }
};

class AlgebraMismatch : public Error
{
public:
	using Error::Error;
	const char *kind() const noexcept override { return "algebra_mismatch"; }
};

class InvalidArgument : public Error
{
public:
	using Error::Error;
	const char *kind() const noexcept override { return "invalid_argument"; }
};

class PreconditionFailure : public Error
{
public:
	using Error::Error;
	const char *kind() const noexcept override { return "precondition_failure"; }
};

/// Raised when an element that is not a unit is inverted. Carries the
/// (1-based) vertices i with pi_i(x) = 0, or the singular diagonal blocks
/// for block-matrix elements.
class NonUnitError : public Error
{
public:
	explicit NonUnitError(std::vector<std::size_t> vanishing);
	const std::vector<std::size_t> &vanishing_set() const noexcept { return vanishing_; }
	const char *kind() const noexcept override { return "non_unit"; }

private:
	std::vector<std::size_t> vanishing_;
};

class ParseError : public Error
{
public:
	ParseError(const std::string &message, std::size_t line, std::size_t column);
	std::size_t line() const noexcept { return line_; }
	std::size_t column() const noexcept { return column_; }
	const char *kind() const noexcept override { return "parse_error"; }

private:
	std::size_t line_;
	std::size_t column_;
};

class UnboundName : public Error
{
public:
	explicit UnboundName(const std::string &name)
	    : Error("unbound name '" + name + "'"), name_(name)
	{}
	const std::string &name() const noexcept { return name_; }
	const char *kind() const noexcept override { return "unbound_name"; }

private:
	std::string name_;
};

} // namespace pointed
