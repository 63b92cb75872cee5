#ifndef HILBFOCK_CLOSEDFORM_HPP
#define HILBFOCK_CLOSEDFORM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbfock/series.hpp"

namespace hilbfock
{

// Closed generating functions for a multiplicative class prod f(x_i) on the
// Hilbert schemes of points of X(2), where F(x) = f(x) f(-x), G(z) = z / F(z)
// and g is the compositional inverse of G.

enum class TableKind
{
	theorem_a_kl,   // a_{k,l} of the exponential formula
	universal_a_kl, // a^{(k,l)}, surface-independent
	chern_character,
	tautological,
};

std::string to_string(TableKind kind);

struct TableEntry
{
	int k;
	int l;
	Rational value;

	friend bool operator==(const TableEntry &, const TableEntry &) = default;
};

/// Symmetric coefficient table (k, l) -> value for k, l >= 1 and k + l <= max_degree.
///
/// Only k >= l is stored; at() answers for either order.
class CoeffTable
{
public:
	CoeffTable(TableKind kind, int max_degree);

	/// Reads x^k y^l coefficients with k >= l >= 1 out of a bivariate series.
	static CoeffTable from_series(TableKind kind, const Series2<Rational> &s);

	TableKind kind() const { return kind_; }
	int max_degree() const { return max_degree_; }

	void set(int k, int l, Rational value);
	const Rational &at(int k, int l) const;

	/// Entries with k >= l, ordered by ascending k + l, then descending k.
	std::vector<TableEntry> rows() const;

	friend bool operator==(const CoeffTable &, const CoeffTable &) = default;

private:
	TableKind kind_;
	int max_degree_;
	std::map<std::pair<int, int>, Rational> entries_;
};

/// G(z) = z / (f(z) f(-z)); odd, linear coefficient 1, order f.order() + 1.
template <CoefficientRing R>
Series1<R> big_g(const Series1<R> &f)
{
	if (!(f[0] == R(Rational(1)))) {
		throw DomainError("a multiplicative class needs a series with constant term 1");
	}
	return shift_up(reciprocal(f * reflected(f)), 1);
}

/// Compositional inverse of G to the given order; needs f.order() >= order - 1.
template <CoefficientRing R>
Series1<R> small_g(const Series1<R> &f, int order)
{
	return compositional_inverse(big_g(f).truncated(order));
}

/// a_k = [x^k] g / k for k = 1..g.order().
template <CoefficientRing R>
std::vector<R> a_k_from_inverse(const Series1<R> &g)
{
	std::vector<R> out;
	for (int k = 1; k <= g.order(); ++k) {
		out.push_back(g[k] * Rational(1, k));
	}
	return out;
}

namespace detail
{

template <CoefficientRing R>
Series2<R> difference(const Series1<R> &g)
{
	return Series2<R>::from_x(g) - Series2<R>::from_y(g);
}

inline void require_order(int have, int need)
{
	if (have < need) {
		throw PrecisionError("class series known to order " + std::to_string(have) + ", order " + std::to_string(need) +
		                     " required");
	}
}

} // namespace detail

/// log [(g(x) - g(y)) / ((x - y) f(g(x) - g(y)) f(g(y) - g(x)))] to total order N.
/// Its x^k y^l coefficients are the a_{k,l}. Needs f.order() >= N.
template <CoefficientRing R>
Series2<R> a_kl_series(const Series1<R> &f, int order)
{
	detail::require_order(f.order(), order);
	const Series1<R> g = small_g(f, order + 1);
	const Series2<R> delta = detail::difference(g);
	const Series2<R> quotient = divide_by_x_minus_y(delta);
	const Series2<R> denominator = compose(f, delta) * compose(f, -delta);
	return series_log(quotient * reciprocal(denominator));
}

/// g'(x) g'(y) (G(g(x) - g(y)) / (x - y))^2 to total order N. Needs f.order() >= N.
template <CoefficientRing R>
Series2<R> z_closed(const Series1<R> &f, int order)
{
	detail::require_order(f.order(), order);
	const Series1<R> big = big_g(f).truncated(order + 1);
	const Series1<R> g = compositional_inverse(big);
	const Series2<R> ratio = divide_by_x_minus_y(compose(big, detail::difference(g)));
	const Series1<R> dg = derivative(g);
	return Series2<R>::from_x(dg) * Series2<R>::from_y(dg) * ratio * ratio;
}

/// sum_{k,l} c_{k,l} (x^k + y^k)(x^l + y^l) for c_{k,l} = [x^k y^l] s.
template <CoefficientRing R>
Series2<R> fibre_exponent(const Series2<R> &s)
{
	std::vector<R> diagonal(static_cast<std::size_t>(s.order()) + 1, R{});
	for (int d = 0; d <= s.order(); ++d) {
		for (int j = 0; j <= d; ++j) {
			diagonal[static_cast<std::size_t>(d)] += s(d - j, j);
		}
	}
	const Series1<R> diag(std::move(diagonal));
	return s + s.swapped() + Series2<R>::from_x(diag) + Series2<R>::from_y(diag);
}

std::vector<Rational> a_k_table(const Series1<Rational> &f, int max_degree);
CoeffTable a_kl_table(const Series1<Rational> &f, int max_degree);

struct CoefficientTables
{
	std::vector<Rational> a_k; // a_1 .. a_N
	CoeffTable a_kl;
};

/// Chern character coefficients from their closed formulas:
///   sum a_k x^k = sum_{m >= 0} 2/(2m+1)! x^{2m+1},
///   a_{k,l} = 2/(2m)! (1 - (-1)^k binom(2m, k)) for k + l = 2m.
CoefficientTables chern_character_tables(int max_degree);

/// The eps-part of the a_{k,l} log series for f = 1 + eps x^n over dual numbers.
Series2<Rational> dual_log_infinitesimal(int n);

/// Degree-n Chern character coefficients a_{k,l}, k >= l, k + l = n, via the
/// dual-number class f = 1 + eps x^n. n must be even and >= 2.
std::vector<TableEntry> corollary_via_dual(int n);

/// a^{(k,l)} = -a_{k,l} for k > l and -a_{k,k}/2 on the diagonal.
CoeffTable to_universal(const CoeffTable &t);

/// Tautological bundle: g inverts x / f(-x) (to the given order), and
///   sum a_{k,l} x^k y^l = log [x y (g(x) - g(y)) / ((x - y) g(x) g(y))].
Series1<Rational> taut_inverse(const Series1<Rational> &f, int order);
Series2<Rational> taut_log_series(const Series1<Rational> &f, int order);
CoefficientTables taut_tables(const Series1<Rational> &f, int max_degree);

} // namespace hilbfock

#endif
