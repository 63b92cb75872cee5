#ifndef HILBFOCK_RATIONAL_HPP
#define HILBFOCK_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hilbfock
{

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// A thin value wrapper around GMP's mpq_class. It exists so that the rest of
/// the library never sees GMP expression templates and so that rendering and
/// parsing are canonical: "p/q", or "p" when the denominator is one.
class Rational
{
public:
	Rational() = default;
	Rational(long long value);
	explicit Rational(const Integer &value);
	Rational(const Integer &num, const Integer &den);
	Rational(long long num, long long den);

	/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
	static Rational parse(std::string_view text);

	Integer numerator() const { return value_.get_num(); }
	Integer denominator() const { return value_.get_den(); }
	const mpq_class &raw() const { return value_; }

	bool is_zero() const { return sgn(value_) == 0; }
	bool is_integer() const { return value_.get_den() == 1; }
	int sign() const { return sgn(value_); }

	std::string str() const;

	Rational &operator+=(const Rational &other);
	Rational &operator-=(const Rational &other);
	Rational &operator*=(const Rational &other);
	Rational &operator/=(const Rational &other);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a);

	friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
	mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

inline bool is_zero(const Rational &q) { return q.is_zero(); }
inline bool is_unit(const Rational &q) { return !q.is_zero(); }
Rational inverse(const Rational &q);
inline std::string to_string(const Rational &q) { return q.str(); }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace hilbfock

#endif
