#ifndef HILBFOCK_SERIES_HPP
#define HILBFOCK_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbfock/errors.hpp"
#include "hilbfock/ring.hpp"

namespace hilbfock
{

/// Truncated formal power series a_0 + a_1 x + ... + a_N x^N + O(x^{N+1}).
///
/// The order N is part of the value. Coefficients past N are unknown, never
/// zero: reading one throws PrecisionError, and every binary operation
/// produces the smaller of the two operand orders.
template <CoefficientRing R>
class Series1
{
public:
	using scalar_type = R;

	explicit Series1(std::vector<R> coefficients) : coeffs_(std::move(coefficients))
	{
		if (coeffs_.empty()) {
			throw PrecisionError("series needs at least one known coefficient");
		}
	}

	static Series1 zero(int order) { return Series1(std::vector<R>(checked_size(order), R{})); }
	static Series1 one(int order) { return monomial(R(Rational(1)), 0, order); }
	static Series1 variable(int order) { return monomial(R(Rational(1)), 1, order); }

	static Series1 monomial(const R &c, int power, int order)
	{
		std::vector<R> v(checked_size(order), R{});
		if (power >= 0 && power <= order) {
			v[static_cast<std::size_t>(power)] = c;
		}
		return Series1(std::move(v));
	}

	/// An exact polynomial, known to any order. Terms above order are dropped.
	static Series1 polynomial(const std::vector<R> &coefficients, int order)
	{
		std::vector<R> v(checked_size(order), R{});
		for (std::size_t k = 0; k < coefficients.size() && k < v.size(); ++k) {
			v[k] = coefficients[k];
		}
		return Series1(std::move(v));
	}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }

	const R &operator[](int k) const
	{
		if (k < 0 || k > order()) {
			throw PrecisionError("coefficient x^" + std::to_string(k) + " of a series known to order " +
			                     std::to_string(order()));
		}
		return coeffs_[static_cast<std::size_t>(k)];
	}

	std::span<const R> coefficients() const { return coeffs_; }

	Series1 truncated(int new_order) const
	{
		if (new_order > order()) {
			throw PrecisionError("cannot raise order " + std::to_string(order()) + " to " + std::to_string(new_order));
		}
		return Series1(std::vector<R>(coeffs_.begin(), coeffs_.begin() + checked_size(new_order)));
	}

	// Index of the first nonzero coefficient, order() + 1 when all known ones vanish.
	int valuation() const
	{
		for (int k = 0; k <= order(); ++k) {
			if (!is_zero(coeffs_[static_cast<std::size_t>(k)])) {
				return k;
			}
		}
		return order() + 1;
	}

	Series1 &operator+=(const Series1 &o)
	{
		shrink_to(o.order());
		for (int k = 0; k <= order(); ++k) {
			at(k) += o.coeffs_[static_cast<std::size_t>(k)];
		}
		return *this;
	}

	Series1 &operator-=(const Series1 &o)
	{
		shrink_to(o.order());
		for (int k = 0; k <= order(); ++k) {
			at(k) -= o.coeffs_[static_cast<std::size_t>(k)];
		}
		return *this;
	}

	Series1 &operator*=(const R &c)
	{
		for (auto &a : coeffs_) {
			a *= c;
		}
		return *this;
	}

	friend bool operator==(const Series1 &, const Series1 &) = default;

private:
	static std::size_t checked_size(int order)
	{
		if (order < 0) {
			throw PrecisionError("negative truncation order " + std::to_string(order));
		}
		return static_cast<std::size_t>(order) + 1;
	}

	R &at(int k) { return coeffs_[static_cast<std::size_t>(k)]; }

	void shrink_to(int o)
	{
		if (o < order()) {
			coeffs_.resize(static_cast<std::size_t>(o) + 1);
		}
	}

	std::vector<R> coeffs_;
};

/// Truncated series in two variables, known for all x^i y^j with i + j <= N.
///
/// Dense triangular storage, grouped by total degree.
template <CoefficientRing R>
class Series2
{
public:
	using scalar_type = R;

	explicit Series2(int order) : order_(order)
	{
		if (order < 0) {
			throw PrecisionError("negative truncation order " + std::to_string(order));
		}
		coeffs_.assign(triangle(order), R{});
	}

	template <typename Fn>
	static Series2 from_function(int order, Fn &&fn)
	{
		Series2 s(order);
		for (int d = 0; d <= order; ++d) {
			for (int j = 0; j <= d; ++j) {
				s.coeffs_[index(d - j, j)] = fn(d - j, j);
			}
		}
		return s;
	}

	static Series2 zero(int order) { return Series2(order); }
	static Series2 one(int order) { return monomial(R(Rational(1)), 0, 0, order); }

	static Series2 monomial(const R &c, int i, int j, int order)
	{
		Series2 s(order);
		if (i >= 0 && j >= 0 && i + j <= order) {
			s.coeffs_[index(i, j)] = c;
		}
		return s;
	}

	static Series2 from_x(const Series1<R> &s)
	{
		Series2 r(s.order());
		for (int i = 0; i <= s.order(); ++i) {
			r.coeffs_[index(i, 0)] = s[i];
		}
		return r;
	}

	static Series2 from_y(const Series1<R> &s)
	{
		Series2 r(s.order());
		for (int j = 0; j <= s.order(); ++j) {
			r.coeffs_[index(0, j)] = s[j];
		}
		return r;
	}

	int order() const { return order_; }

	const R &operator()(int i, int j) const
	{
		if (i < 0 || j < 0 || i + j > order_) {
			throw PrecisionError("coefficient x^" + std::to_string(i) + " y^" + std::to_string(j) +
			                     " of a series known to total order " + std::to_string(order_));
		}
		return coeffs_[index(i, j)];
	}

	Series2 truncated(int new_order) const
	{
		if (new_order > order_) {
			throw PrecisionError("cannot raise order " + std::to_string(order_) + " to " + std::to_string(new_order));
		}
		Series2 r(new_order);
		std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(triangle(new_order)), r.coeffs_.begin());
		return r;
	}

	/// Adds c to the coefficient of x^i y^j; terms beyond the order are ignored.
	void add_term(int i, int j, const R &c)
	{
		if (i >= 0 && j >= 0 && i + j <= order_) {
			coeffs_[index(i, j)] += c;
		}
	}

	bool is_symmetric() const
	{
		for (int d = 0; d <= order_; ++d) {
			for (int j = 0; j < d - j; ++j) {
				if (!(coeffs_[index(d - j, j)] == coeffs_[index(j, d - j)])) {
					return false;
				}
			}
		}
		return true;
	}

	Series2 swapped() const
	{
		return from_function(order_, [this](int i, int j) { return coeffs_[index(j, i)]; });
	}

	Series2 &operator+=(const Series2 &o)
	{
		shrink_to(o.order_);
		for (std::size_t k = 0; k < coeffs_.size(); ++k) {
			coeffs_[k] += o.coeffs_[k];
		}
		return *this;
	}

	Series2 &operator-=(const Series2 &o)
	{
		shrink_to(o.order_);
		for (std::size_t k = 0; k < coeffs_.size(); ++k) {
			coeffs_[k] -= o.coeffs_[k];
		}
		return *this;
	}

	Series2 &operator*=(const R &c)
	{
		for (auto &a : coeffs_) {
			a *= c;
		}
		return *this;
	}

	friend bool operator==(const Series2 &, const Series2 &) = default;

	static std::size_t index(int i, int j)
	{
		const auto d = static_cast<std::size_t>(i + j);
		return d * (d + 1) / 2 + static_cast<std::size_t>(j);
	}

private:
	static std::size_t triangle(int order)
	{
		const auto n = static_cast<std::size_t>(order) + 1;
		return n * (n + 1) / 2;
	}

	void shrink_to(int o)
	{
		if (o < order_) {
			order_ = o;
			coeffs_.resize(triangle(o));
		}
	}

	int order_;
	std::vector<R> coeffs_;
};

// ---------------------------------------------------------------------------
// Arithmetic

template <CoefficientRing R>
Series1<R> operator+(Series1<R> a, const Series1<R> &b)
{
	return a += b;
}

template <CoefficientRing R>
Series1<R> operator-(Series1<R> a, const Series1<R> &b)
{
	return a -= b;
}

template <CoefficientRing R>
Series1<R> operator-(Series1<R> a)
{
	return a *= R(Rational(-1));
}

template <CoefficientRing R>
Series1<R> operator*(Series1<R> a, const R &c)
{
	return a *= c;
}

template <CoefficientRing R>
Series1<R> operator*(const R &c, Series1<R> a)
{
	return a *= c;
}

template <CoefficientRing R>
Series1<R> operator*(const Series1<R> &a, const Series1<R> &b)
{
	const int n = std::min(a.order(), b.order());
	std::vector<R> out(static_cast<std::size_t>(n) + 1, R{});
	for (int i = 0; i <= n; ++i) {
		if (is_zero(a[i])) {
			continue;
		}
		for (int j = 0; i + j <= n; ++j) {
			out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
		}
	}
	return Series1<R>(std::move(out));
}

template <CoefficientRing R>
Series2<R> operator+(Series2<R> a, const Series2<R> &b)
{
	return a += b;
}

template <CoefficientRing R>
Series2<R> operator-(Series2<R> a, const Series2<R> &b)
{
	return a -= b;
}

template <CoefficientRing R>
Series2<R> operator-(Series2<R> a)
{
	return a *= R(Rational(-1));
}

template <CoefficientRing R>
Series2<R> operator*(Series2<R> a, const R &c)
{
	return a *= c;
}

template <CoefficientRing R>
Series2<R> operator*(const R &c, Series2<R> a)
{
	return a *= c;
}

template <CoefficientRing R>
Series2<R> operator*(const Series2<R> &a, const Series2<R> &b)
{
	const int n = std::min(a.order(), b.order());
	Series2<R> out(n);
	for (int d1 = 0; d1 <= n; ++d1) {
		for (int j1 = 0; j1 <= d1; ++j1) {
			const R &c1 = a(d1 - j1, j1);
			if (is_zero(c1)) {
				continue;
			}
			for (int d2 = 0; d1 + d2 <= n; ++d2) {
				for (int j2 = 0; j2 <= d2; ++j2) {
					const R &c2 = b(d2 - j2, j2);
					if (!is_zero(c2)) {
						out.add_term(d1 - j1 + d2 - j2, j1 + j2, c1 * c2);
					}
				}
			}
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// Coefficient access

template <CoefficientRing R>
const R &coefficient(const Series1<R> &s, int k)
{
	return s[k];
}

template <CoefficientRing R>
const R &coefficient(const Series2<R> &s, int i, int j)
{
	return s(i, j);
}

/// The d + 1 coefficients of x^{d-j} y^j, j = 0..d.
template <CoefficientRing R>
std::vector<R> homogeneous_component(const Series2<R> &s, int d)
{
	std::vector<R> out;
	for (int j = 0; j <= d; ++j) {
		out.push_back(s(d - j, j));
	}
	return out;
}

// ---------------------------------------------------------------------------
// Univariate transformations

template <CoefficientRing R>
Series1<R> derivative(const Series1<R> &s)
{
	if (s.order() < 1) {
		throw PrecisionError("derivative of a series known only to order 0");
	}
	std::vector<R> out;
	for (int k = 1; k <= s.order(); ++k) {
		out.push_back(s[k] * Rational(k));
	}
	return Series1<R>(std::move(out));
}

/// s * x^k; the order grows by k.
template <CoefficientRing R>
Series1<R> shift_up(const Series1<R> &s, int k)
{
	std::vector<R> out(static_cast<std::size_t>(k), R{});
	out.insert(out.end(), s.coefficients().begin(), s.coefficients().end());
	return Series1<R>(std::move(out));
}

/// s / x^k; the first k coefficients must vanish and the order drops by k.
template <CoefficientRing R>
Series1<R> shift_down(const Series1<R> &s, int k)
{
	if (s.order() < k) {
		throw PrecisionError("cannot divide a series of order " + std::to_string(s.order()) + " by x^" + std::to_string(k));
	}
	for (int i = 0; i < k; ++i) {
		if (!is_zero(s[i])) {
			throw DomainError("series is not divisible by x^" + std::to_string(k));
		}
	}
	return Series1<R>(std::vector<R>(s.coefficients().begin() + k, s.coefficients().end()));
}

/// s(c x).
template <CoefficientRing R>
Series1<R> dilated(const Series1<R> &s, const R &c)
{
	std::vector<R> out;
	R power(Rational(1));
	for (int k = 0; k <= s.order(); ++k) {
		out.push_back(s[k] * power);
		power *= c;
	}
	return Series1<R>(std::move(out));
}

/// s(-x).
template <CoefficientRing R>
Series1<R> reflected(const Series1<R> &s)
{
	return dilated(s, R(Rational(-1)));
}

template <CoefficientRing R>
bool is_even(const Series1<R> &s)
{
	for (int k = 1; k <= s.order(); k += 2) {
		if (!is_zero(s[k])) {
			return false;
		}
	}
	return true;
}

template <CoefficientRing R>
bool is_odd(const Series1<R> &s)
{
	for (int k = 0; k <= s.order(); k += 2) {
		if (!is_zero(s[k])) {
			return false;
		}
	}
	return true;
}

/// Multiplicative inverse of a series with unit constant term.
template <CoefficientRing R>
Series1<R> reciprocal(const Series1<R> &s)
{
	if (!is_unit(s[0])) {
		throw DomainError("series with non-unit constant term is not invertible");
	}
	const R c0 = inverse(s[0]);
	std::vector<R> out{c0};
	for (int n = 1; n <= s.order(); ++n) {
		R acc{};
		for (int k = 1; k <= n; ++k) {
			acc += s[k] * out[static_cast<std::size_t>(n - k)];
		}
		out.push_back(-(acc * c0));
	}
	return Series1<R>(std::move(out));
}

/// s^k for any integer k; negative powers need a unit constant term.
template <CoefficientRing R>
Series1<R> pow(const Series1<R> &s, int k)
{
	Series1<R> base = k < 0 ? reciprocal(s) : s;
	unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
	Series1<R> result = Series1<R>::one(s.order());
	while (e != 0) {
		if (e & 1U) {
			result = result * base;
		}
		e >>= 1U;
		if (e != 0) {
			base = base * base;
		}
	}
	return result;
}

template <CoefficientRing R>
Series1<R> series_exp(const Series1<R> &s)
{
	if (!is_zero(s[0])) {
		throw DomainError("exp requires zero constant term");
	}
	std::vector<R> e{R(Rational(1))};
	for (int n = 1; n <= s.order(); ++n) {
		R acc{};
		for (int k = 1; k <= n; ++k) {
			acc += s[k] * e[static_cast<std::size_t>(n - k)] * Rational(k);
		}
		e.push_back(acc * Rational(1, n));
	}
	return Series1<R>(std::move(e));
}

template <CoefficientRing R>
Series1<R> series_log(const Series1<R> &s)
{
	if (!(s[0] == R(Rational(1)))) {
		throw DomainError("log requires constant term 1");
	}
	std::vector<R> l{R{}};
	for (int n = 1; n <= s.order(); ++n) {
		R acc = s[n] * Rational(n);
		for (int k = 1; k < n; ++k) {
			acc -= l[static_cast<std::size_t>(k)] * s[n - k] * Rational(k);
		}
		l.push_back(acc * Rational(1, n));
	}
	return Series1<R>(std::move(l));
}

namespace detail
{

template <CoefficientRing R, typename S>
S horner(const Series1<R> &outer, const S &inner, int order)
{
	S result = S::one(order) * outer[order];
	for (int k = order - 1; k >= 0; --k) {
		result = result * inner;
		result += S::one(order) * outer[k];
	}
	return result;
}

} // namespace detail

/// outer(inner(x)); inner must have zero constant term.
template <CoefficientRing R>
Series1<R> compose(const Series1<R> &outer, const Series1<R> &inner)
{
	if (!is_zero(inner[0])) {
		throw DomainError("composition requires the inner series to have zero constant term");
	}
	const int n = std::min(outer.order(), inner.order());
	return detail::horner(outer, inner.truncated(n), n);
}

/// outer(inner(x, y)); inner must have zero constant term.
template <CoefficientRing R>
Series2<R> compose(const Series1<R> &outer, const Series2<R> &inner)
{
	if (!is_zero(inner(0, 0))) {
		throw DomainError("composition requires the inner series to have zero constant term");
	}
	const int n = std::min(outer.order(), inner.order());
	return detail::horner(outer, inner.truncated(n), n);
}

/// The series g with s(g(x)) = x, to the order of s.
///
/// Solved one coefficient at a time by the linear fixed-point step
/// g <- g - (s(g) - x) / s_1. The round trip is checked before returning.
template <CoefficientRing R>
Series1<R> compositional_inverse(const Series1<R> &s)
{
	if (s.order() < 1) {
		throw PrecisionError("compositional inverse needs order at least 1");
	}
	if (!is_zero(s[0]) || !is_unit(s[1])) {
		throw DomainError("not invertible under composition");
	}
	const int n = s.order();
	const R inv1 = inverse(s[1]);
	const Series1<R> x = Series1<R>::variable(n);
	Series1<R> g = x * inv1;
	for (int step = 2; step <= n; ++step) {
		const Series1<R> residual = compose(s, g) - x;
		if (residual.valuation() > n) {
			break;
		}
		g -= residual * inv1;
	}
	if (!(compose(s, g) == x)) {
		throw InternalError("compositional inverse failed its round-trip check");
	}
	return g;
}

// ---------------------------------------------------------------------------
// Bivariate transformations

template <CoefficientRing R>
Series2<R> reciprocal(const Series2<R> &s)
{
	if (!is_unit(s(0, 0))) {
		throw DomainError("series with non-unit constant term is not invertible");
	}
	const R c0 = inverse(s(0, 0));
	Series2<R> out(s.order());
	out.add_term(0, 0, c0);
	for (int d = 1; d <= s.order(); ++d) {
		for (int j = 0; j <= d; ++j) {
			const int i = d - j;
			R acc{};
			for (int a = 0; a <= i; ++a) {
				for (int b = 0; b <= j; ++b) {
					if ((a != 0 || b != 0) && !is_zero(s(a, b))) {
						acc += s(a, b) * out(i - a, j - b);
					}
				}
			}
			out.add_term(i, j, -(acc * c0));
		}
	}
	return out;
}

/// (x d/dx + y d/dy) s, the total-degree operator.
template <CoefficientRing R>
Series2<R> euler_operator(const Series2<R> &s)
{
	return Series2<R>::from_function(s.order(), [&s](int i, int j) { return s(i, j) * Rational(i + j); });
}

template <CoefficientRing R>
Series2<R> series_exp(const Series2<R> &s)
{
	if (!is_zero(s(0, 0))) {
		throw DomainError("exp requires zero constant term");
	}
	// D(E) = D(s) E for the total-degree operator D, so the degree-d part of E
	// is determined by the parts of lower degree.
	const Series2<R> ds = euler_operator(s);
	Series2<R> e(s.order());
	e.add_term(0, 0, R(Rational(1)));
	for (int d = 1; d <= s.order(); ++d) {
		for (int j = 0; j <= d; ++j) {
			const int i = d - j;
			R acc{};
			for (int a = 0; a <= i; ++a) {
				for (int b = 0; b <= j; ++b) {
					if ((a != 0 || b != 0) && !is_zero(ds(a, b))) {
						acc += ds(a, b) * e(i - a, j - b);
					}
				}
			}
			e.add_term(i, j, acc * Rational(1, d));
		}
	}
	return e;
}

template <CoefficientRing R>
Series2<R> series_log(const Series2<R> &s)
{
	if (!(s(0, 0) == R(Rational(1)))) {
		throw DomainError("log requires constant term 1");
	}
	const Series2<R> t = euler_operator(s) * reciprocal(s);
	return Series2<R>::from_function(s.order(), [&t](int i, int j) {
		return i + j == 0 ? R{} : t(i, j) * Rational(1, i + j);
	});
}

template <CoefficientRing R>
Series2<R> partial_x(const Series2<R> &s)
{
	if (s.order() < 1) {
		throw PrecisionError("derivative of a series known only to order 0");
	}
	return Series2<R>::from_function(s.order() - 1, [&s](int i, int j) { return s(i + 1, j) * Rational(i + 1); });
}

template <CoefficientRing R>
Series2<R> partial_y(const Series2<R> &s)
{
	if (s.order() < 1) {
		throw PrecisionError("derivative of a series known only to order 0");
	}
	return Series2<R>::from_function(s.order() - 1, [&s](int i, int j) { return s(i, j + 1) * Rational(j + 1); });
}

/// s / x; every coefficient free of x must vanish. The order drops by one.
template <CoefficientRing R>
Series2<R> shift_down_x(const Series2<R> &s)
{
	if (s.order() < 1) {
		throw PrecisionError("cannot divide a series of order 0 by x");
	}
	for (int j = 0; j <= s.order(); ++j) {
		if (!is_zero(s(0, j))) {
			throw DomainError("series is not divisible by x");
		}
	}
	return Series2<R>::from_function(s.order() - 1, [&s](int i, int j) { return s(i + 1, j); });
}

template <CoefficientRing R>
Series2<R> shift_down_y(const Series2<R> &s)
{
	return shift_down_x(s.swapped()).swapped();
}

/// s(x, 0).
template <CoefficientRing R>
Series1<R> restrict_to_x(const Series2<R> &s)
{
	std::vector<R> out;
	for (int i = 0; i <= s.order(); ++i) {
		out.push_back(s(i, 0));
	}
	return Series1<R>(std::move(out));
}

/// Exact quotient s / (x - y) by synthetic division on each homogeneous part.
///
/// Throws DomainError when a remainder is left: in this library that always
/// signals an upstream bug, since every numerator constructed vanishes on the
/// diagonal.
template <CoefficientRing R>
Series2<R> divide_by_x_minus_y(const Series2<R> &s)
{
	if (s.order() < 1) {
		throw PrecisionError("cannot divide a series of order 0 by (x-y)");
	}
	if (!is_zero(s(0, 0))) {
		throw DomainError("not divisible by (x-y): nonzero constant term");
	}
	Series2<R> q(s.order() - 1);
	for (int d = 1; d <= s.order(); ++d) {
		// (x - y) q_{d-1} = s_d; coefficient of x^i y^j is q(i-1, j) - q(i, j-1).
		R carry{};
		for (int j = 0; j < d; ++j) {
			carry += s(d - j, j);
			q.add_term(d - j - 1, j, carry);
		}
		if (!is_zero(s(0, d) + carry)) {
			throw DomainError("not divisible by (x-y): nonzero remainder in degree " + std::to_string(d));
		}
	}
	return q;
}

} // namespace hilbfock

#endif
