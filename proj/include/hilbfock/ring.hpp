#ifndef HILBFOCK_RING_HPP
#define HILBFOCK_RING_HPP

#include <concepts>
#include <iosfwd>
#include <string>

#include "hilbfock/rational.hpp"

namespace hilbfock
{

/// Commutative Q-algebra usable as a series coefficient ring.
///
/// Two models ship with the library: Rational and DualNumber. Besides the
/// ring operations a model must provide is_zero, is_unit and inverse as free
/// functions found by ADL, and must be constructible from a Rational.
template <typename R>
concept CoefficientRing = std::regular<R> && std::constructible_from<R, const Rational &> &&
    requires(R a, const R &b, const Rational &q) {
	    { a + b } -> std::convertible_to<R>;
	    { a - b } -> std::convertible_to<R>;
	    { a * b } -> std::convertible_to<R>;
	    { -b } -> std::convertible_to<R>;
	    { b * q } -> std::convertible_to<R>;
	    { a += b };
	    { a -= b };
	    { a *= b };
	    { is_zero(b) } -> std::convertible_to<bool>;
	    { is_unit(b) } -> std::convertible_to<bool>;
	    { inverse(b) } -> std::convertible_to<R>;
	    { to_string(b) } -> std::convertible_to<std::string>;
    };

/// Element value + infinitesimal * eps of Q[eps]/(eps^2).
class DualNumber
{
public:
	DualNumber() = default;
	DualNumber(const Rational &value) : value_(value) {}
	DualNumber(long long value) : value_(value) {}
	DualNumber(const Rational &value, const Rational &infinitesimal) : value_(value), eps_(infinitesimal) {}

	static DualNumber epsilon() { return {Rational(0), Rational(1)}; }

	const Rational &value() const { return value_; }
	const Rational &infinitesimal() const { return eps_; }

	DualNumber &operator+=(const DualNumber &o)
	{
		value_ += o.value_;
		eps_ += o.eps_;
		return *this;
	}
	DualNumber &operator-=(const DualNumber &o)
	{
		value_ -= o.value_;
		eps_ -= o.eps_;
		return *this;
	}
	DualNumber &operator*=(const DualNumber &o)
	{
		eps_ = value_ * o.eps_ + eps_ * o.value_;
		value_ *= o.value_;
		return *this;
	}

	friend DualNumber operator+(DualNumber a, const DualNumber &b) { return a += b; }
	friend DualNumber operator-(DualNumber a, const DualNumber &b) { return a -= b; }
	friend DualNumber operator*(DualNumber a, const DualNumber &b) { return a *= b; }
	friend DualNumber operator*(DualNumber a, const Rational &q)
	{
		a.value_ *= q;
		a.eps_ *= q;
		return a;
	}
	friend DualNumber operator-(const DualNumber &a) { return {-a.value_, -a.eps_}; }
	friend bool operator==(const DualNumber &, const DualNumber &) = default;

private:
	Rational value_;
	Rational eps_;
};

inline bool is_zero(const DualNumber &d) { return d.value().is_zero() && d.infinitesimal().is_zero(); }
inline bool is_unit(const DualNumber &d) { return !d.value().is_zero(); }
DualNumber inverse(const DualNumber &d);
std::string to_string(const DualNumber &d);
std::ostream &operator<<(std::ostream &os, const DualNumber &d);

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<DualNumber>);

} // namespace hilbfock

#endif
