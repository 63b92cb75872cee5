#ifndef HILBFOCK_ERRORS_HPP
#define HILBFOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilbfock
{

// Base class of everything the library throws on bad input.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

// A coefficient was requested beyond the known truncation order.
class PrecisionError : public Error
{
public:
	explicit PrecisionError(const std::string &what) : Error("insufficient precision: " + what) {}
};

// An operation was applied outside of its mathematical domain.
class DomainError : public Error
{
public:
	using Error::Error;
};

class ParseError : public Error
{
public:
	using Error::Error;
};

// A self-check failed. This always indicates a bug in the library.
class InternalError : public std::logic_error
{
public:
	using std::logic_error::logic_error;
};

} // namespace hilbfock

#endif
