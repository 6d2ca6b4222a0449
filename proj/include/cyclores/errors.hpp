#pragma once

#include <stdexcept>
#include <string>

namespace cyclores {

// Caller passed something outside an operation's precondition (bad prime, index out of range, ...).
class UsageError : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

// Two values built over different cyclotomic fields were combined.
class ContextMismatch : public std::invalid_argument
{
public:
	ContextMismatch() : std::invalid_argument("values belong to different cyclotomic fields") {}
};

// The residue of an element at the ideal is zero, so its symbol is undefined.
class NotCoprime : public std::domain_error
{
public:
	explicit NotCoprime(const std::string & what, std::size_t index = 0)
		: std::domain_error(what), _index(index) {}
	std::size_t index() const { return _index; }
private:
	std::size_t _index;
};

// An invariant that should hold by construction failed; indicates an arithmetic bug.
class InternalError : public std::logic_error
{
public:
	using std::logic_error::logic_error;
};

// A checked identity or classical divisor property did not hold.
class VerificationFailure : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

}
