#include "hilbfock/rational.hpp"

#include <cctype>
#include <ostream>

#include "hilbfock/errors.hpp"

namespace hilbfock
{

namespace
{

bool is_digit_run(std::string_view s)
{
	if (s.empty()) {
		return false;
	}
	for (char c : s) {
		if (!std::isdigit(static_cast<unsigned char>(c))) {
			return false;
		}
	}
	return true;
}

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
		s.remove_prefix(1);
	}
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
		s.remove_suffix(1);
	}
	return s;
}

} // namespace

Rational::Rational(long long value) : value_(Integer(static_cast<signed long>(value)))
{
	static_assert(sizeof(long) == sizeof(long long));
}

Rational::Rational(const Integer &value) : value_(value) {}

Rational::Rational(const Integer &num, const Integer &den)
{
	if (den == 0) {
		throw DomainError("rational with zero denominator");
	}
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(static_cast<signed long>(num)), Integer(static_cast<signed long>(den)))
{
}

Rational Rational::parse(std::string_view text)
{
	const std::string_view t = trim(text);
	std::string_view body = t;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	const auto slash = body.find('/');
	const std::string_view num = body.substr(0, slash);
	const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
	if (!is_digit_run(num) || !is_digit_run(den)) {
		throw ParseError("not a rational number: '" + std::string(t) + "'");
	}
	Integer n(std::string(num), 10);
	Integer d(std::string(den), 10);
	if (d == 0) {
		throw ParseError("zero denominator in '" + std::string(t) + "'");
	}
	if (negative) {
		n = -n;
	}
	return Rational(n, d);
}

std::string Rational::str() const
{
	std::string out = value_.get_num().get_str();
	if (value_.get_den() != 1) {
		out += '/';
		out += value_.get_den().get_str();
	}
	return out;
}

Rational &Rational::operator+=(const Rational &other)
{
	value_ += other.value_;
	return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
	value_ -= other.value_;
	return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
	value_ *= other.value_;
	return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
	if (other.is_zero()) {
		throw DomainError("division by zero");
	}
	value_ /= other.value_;
	return *this;
}

Rational operator-(const Rational &a)
{
	Rational r;
	r.value_ = -a.value_;
	return r;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
	const int c = cmp(a.value_, b.value_);
	if (c < 0) {
		return std::strong_ordering::less;
	}
	return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.str(); }

Rational inverse(const Rational &q)
{
	if (q.is_zero()) {
		throw DomainError("zero is not invertible");
	}
	return Rational(q.denominator(), q.numerator());
}

Integer factorial(unsigned n)
{
	Integer r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

Integer binomial(unsigned n, unsigned k)
{
	Integer r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

} // namespace hilbfock
