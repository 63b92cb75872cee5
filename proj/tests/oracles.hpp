#ifndef HILBFOCK_TESTS_ORACLES_HPP
#define HILBFOCK_TESTS_ORACLES_HPP

// Slow, direct reference computations that the library routines are checked against.

#include <array>
#include <random>
#include <vector>

#include "hilbfock/partitions.hpp"
#include "hilbfock/series.hpp"

namespace oracle
{

using hilbfock::Integer;
using hilbfock::Rational;
using S1 = hilbfock::Series1<Rational>;
using S2 = hilbfock::Series2<Rational>;

inline S1 poly(std::vector<Rational> c, int order) { return S1::polynomial(c, order); }

// x^k by repeated multiplication, truncated to s.order().
template <typename S>
S naive_power(const S &s, int k, const S &one)
{
	S r = one;
	for (int i = 0; i < k; ++i) {
		r = r * s;
	}
	return r;
}

// sum_k outer[k] inner^k, term by term.
inline S1 naive_compose(const S1 &outer, const S1 &inner)
{
	const int order = std::min(outer.order(), inner.order());
	S1 r = S1::zero(order);
	S1 p = S1::one(order);
	for (int k = 0; k <= order; ++k) {
		r += p * outer[k];
		p = p * inner.truncated(order);
	}
	return r;
}

template <typename S>
S naive_exp(const S &s, const S &one, int order)
{
	S r = one;
	S term = one;
	for (int k = 1; k <= order; ++k) {
		term = term * s * Rational(1, k);
		r += term;
	}
	return r;
}

// log(1 + t) = sum (-1)^{k+1} t^k / k
template <typename S>
S naive_log(const S &s, const S &one, int order)
{
	const S t = s - one;
	S r = one - one;
	S p = one;
	for (int k = 1; k <= order; ++k) {
		p = p * t;
		r += p * Rational(k % 2 == 1 ? 1 : -1, k);
	}
	return r;
}

// Lagrange inversion: [x^n] g = (1/n) [z^{n-1}] (z / f)^n for the inverse g of f.
inline S1 lagrange_inverse(const S1 &f)
{
	const int order = f.order();
	const S1 unit = hilbfock::shift_down(f, 1); // f / z
	const S1 inv = hilbfock::reciprocal(unit);
	std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
	S1 p = S1::one(order - 1);
	for (int n = 1; n <= order; ++n) {
		p = p * inv.truncated(order - 1);
		c[static_cast<std::size_t>(n)] = p[n - 1] * Rational(1, n);
	}
	return S1(std::move(c));
}

// Coefficients c_k with g = sum c_k f^k, found by peeling off leading terms.
inline std::vector<Rational> peel_univariate(const S1 &g, const S1 &f, int max_k)
{
	S1 rest = g.truncated(max_k);
	const S1 base = f.truncated(max_k);
	std::vector<Rational> out;
	S1 p = S1::one(max_k);
	for (int k = 0; k <= max_k; ++k) {
		Rational lead = p[k];
		const Rational c = rest[k] / lead;
		rest -= p * c;
		out.push_back(c);
		p = p * base;
	}
	return out;
}

// Two-variable version: g = sum c_{k0,k1} f0^k0 f1^k1, peeled in order of total degree.
inline S2 peel_bivariate(const S2 &g, const std::array<S2, 2> &f, int order)
{
	S2 rest = g.truncated(order);
	S2 out(order);
	for (int d = 0; d <= order; ++d) {
		for (int k0 = 0; k0 <= d; ++k0) {
			const int k1 = d - k0;
			const S2 one = S2::one(order);
			const S2 p = naive_power(f[0].truncated(order), k0, one) * naive_power(f[1].truncated(order), k1, one);
			const Rational c = rest(k0, k1) / p(k0, k1);
			rest -= p * c;
			out.add_term(k0, k1, c);
		}
	}
	return out;
}

// Partition numbers from Euler's pentagonal recurrence.
inline std::vector<long long> partition_counts(int n)
{
	std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
	p[0] = 1;
	for (int m = 1; m <= n; ++m) {
		long long total = 0;
		for (int k = 1;; ++k) {
			const int g1 = k * (3 * k - 1) / 2;
			const int g2 = k * (3 * k + 1) / 2;
			if (g1 > m) {
				break;
			}
			const long long sign = k % 2 == 1 ? 1 : -1;
			total += sign * p[static_cast<std::size_t>(m - g1)];
			if (g2 <= m) {
				total += sign * p[static_cast<std::size_t>(m - g2)];
			}
		}
		p[static_cast<std::size_t>(m)] = total;
	}
	return p;
}

// s_{(a,b)}(x, y) = sum_{j=b}^{a} x^j y^{a+b-j}, counting semistandard tableaux.
inline S2 two_row_schur(int a, int b, int order)
{
	S2 s(order);
	for (int j = b; j <= a; ++j) {
		s.add_term(j, a + b - j, Rational(1));
	}
	return s;
}

// Hook product of a partition with at most two rows: (a+1)! b! / (a-b+1).
inline Integer two_row_hook_product(int a, int b)
{
	return hilbfock::factorial(static_cast<unsigned>(a + 1)) * hilbfock::factorial(static_cast<unsigned>(b)) /
	       Integer(a - b + 1);
}

// f = 1 + sum c_i x^i, with small random rational c_i.
inline S1 random_class(std::mt19937 &rng, int order)
{
	std::uniform_int_distribution<int> num(-5, 5);
	std::uniform_int_distribution<int> den(1, 4);
	std::vector<Rational> c{Rational(1)};
	for (int i = 1; i <= order; ++i) {
		c.push_back(Rational(num(rng), den(rng)));
	}
	return S1(std::move(c));
}

// Random series with zero constant term.
inline S1 random_series(std::mt19937 &rng, int order)
{
	S1 s = random_class(rng, order);
	return s - S1::one(order);
}

inline S2 random_series2(std::mt19937 &rng, int order)
{
	std::uniform_int_distribution<int> num(-4, 4);
	std::uniform_int_distribution<int> den(1, 3);
	return S2::from_function(order, [&](int i, int j) {
		return i + j == 0 ? Rational(0) : Rational(num(rng), den(rng));
	});
}

} // namespace oracle

#endif
