#include "hilbfock/localisation.hpp"

#include <algorithm>

#include "hilbfock/parallel.hpp"
#include "hilbfock/symfun.hpp"

namespace hilbfock
{

namespace
{

void require_class_series(const Series1<Rational> &f, int order)
{
	if (!(f[0] == Rational(1))) {
		throw DomainError("a multiplicative class needs a series with constant term 1");
	}
	if (f.order() < order) {
		throw PrecisionError("class series known to order " + std::to_string(f.order()) + ", order " +
		                     std::to_string(order) + " required");
	}
}

Series1<Rational> symmetric_square(const Series1<Rational> &f) { return f * reflected(f); }

// Partitions of n with at most two rows: (n), (n-1,1), ..., in reverse lexicographic order.
std::vector<Partition> two_row_partitions(int n)
{
	std::vector<Partition> out;
	for (int b = 0; 2 * b <= n; ++b) {
		out.push_back(Partition{n - b, b});
	}
	return out;
}

} // namespace

std::vector<FixedPoint> fixed_points(int n)
{
	std::vector<FixedPoint> out;
	for (int n0 = n; n0 >= 0; --n0) {
		const auto first = enumerate_partitions(n0);
		const auto second = enumerate_partitions(n - n0);
		for (const auto &l0 : first) {
			for (const auto &l1 : second) {
				out.push_back({l0, l1});
			}
		}
	}
	return out;
}

WeightMultiset tangent_weights(const FixedPoint &p, long long gamma)
{
	return multiset_union(weight_multiset(p.lambda0, -1, -1), weight_multiset(p.lambda1, gamma - 1, 1));
}

EquivariantClassVector::EquivariantClassVector(int level, std::vector<EquivariantEntry> entries)
    : level_(level), entries_(std::move(entries))
{
	for (const auto &e : entries_) {
		if (e.point.level() != level_) {
			throw DomainError("fixed point " + e.point.str() + " does not belong to level " + std::to_string(level_));
		}
	}
}

const Rational &EquivariantClassVector::at(const FixedPoint &p) const
{
	const auto it = std::find_if(entries_.begin(), entries_.end(), [&p](const auto &e) { return e.point == p; });
	if (it == entries_.end()) {
		throw DomainError("no fixed point " + p.str() + " at level " + std::to_string(level_));
	}
	return it->value;
}

EquivariantClassVector equivariant_class_coeffs(const Series1<Rational> &f, long long gamma, int n)
{
	if (n < 0) {
		throw DomainError("level must be non-negative");
	}
	require_class_series(f, n);
	const Series1<Rational> base = f.truncated(n);
	const std::vector<FixedPoint> points = fixed_points(n);

	auto values = parallel_map<Rational>(points.size(), [&](std::size_t i) {
		const FixedPoint &p = points[i];
		const Integer denominator = c_prime_product(p.lambda0, -1, -1) * c_prime_product(p.lambda1, gamma - 1, 1);
		if (denominator == 0) {
			throw DomainError("vanishing tangent weight at fixed point " + p.str() + " for gamma = " +
			                  std::to_string(gamma));
		}
		Series1<Rational> product = Series1<Rational>::one(n);
		for (long long w : tangent_weights(p, gamma).weights) {
			product = product * dilated(base, Rational(w));
		}
		return product[n] / Rational(denominator);
	});

	std::vector<EquivariantEntry> entries;
	for (std::size_t i = 0; i < points.size(); ++i) {
		entries.push_back({points[i], std::move(values[i])});
	}
	return EquivariantClassVector(n, std::move(entries));
}

Rational hook_form_coefficient(const Series1<Rational> &big_f, const FixedPoint &p)
{
	const int n = p.level();
	if (big_f.order() < n) {
		throw PrecisionError("F known to order " + std::to_string(big_f.order()) + ", level " + std::to_string(n) +
		                     " required");
	}
	const Series1<Rational> base = big_f.truncated(n);
	Series1<Rational> product = Series1<Rational>::one(n);
	for (const Partition *lambda : {&p.lambda0, &p.lambda1}) {
		for (int h : hook_lengths(*lambda)) {
			product = product * dilated(base, Rational(h));
		}
	}
	Rational value = product[n] / Rational(hook_product(p.lambda0) * hook_product(p.lambda1));
	if (p.lambda0.size() % 2 != 0) {
		value = -value;
	}
	return value;
}

Series2<Rational> z_series_hookform(const Series1<Rational> &f, int order)
{
	require_class_series(f, order);
	const Series1<Rational> big_f = symmetric_square(f.truncated(order));

	std::vector<FixedPoint> points;
	for (int n = 0; n <= order; ++n) {
		for (int n0 = n; n0 >= 0; --n0) {
			for (const auto &l0 : two_row_partitions(n0)) {
				for (const auto &l1 : two_row_partitions(n - n0)) {
					points.push_back({l0, l1});
				}
			}
		}
	}

	auto terms = parallel_map<Series2<Rational>>(points.size(), [&](std::size_t i) {
		const FixedPoint &p = points[i];
		const Rational c = hook_form_coefficient(big_f, p);
		if (c.is_zero()) {
			return Series2<Rational>::zero(order);
		}
		return schur_two_vars(p.lambda0, order) * schur_two_vars(p.lambda1, order) * c;
	});

	Series2<Rational> z = Series2<Rational>::zero(order);
	for (const auto &t : terms) {
		z += t;
	}
	return z;
}

Series2<Rational> z_series_residue(const Series1<Rational> &f, int order)
{
	const int m = order + 2;
	require_class_series(f, m);
	const Series1<Rational> big_f = symmetric_square(f.truncated(m));
	const Series1<Rational> big_g = shift_up(reciprocal(big_f), 1).truncated(m);

	Series2<Rational> a_minus_b = Series2<Rational>::monomial(Rational(1), 1, 0, m);
	a_minus_b.add_term(0, 1, Rational(-1));
	const Series2<Rational> kernel = compose(big_g, a_minus_b) * compose(big_g, -a_minus_b);

	// powers[r] = F^{r+1}
	std::vector<Series1<Rational>> powers{big_f};
	for (int r = 1; r <= m; ++r) {
		powers.push_back(powers.back() * big_f);
	}

	// One row of [a^r b^s] extractions per r.
	auto rows = parallel_map<std::vector<Rational>>(static_cast<std::size_t>(m) + 1, [&](std::size_t ri) {
		const int r = static_cast<int>(ri);
		std::vector<Rational> row;
		for (int s = 0; r + s <= m; ++s) {
			Rational c;
			for (int i = 0; i <= r; ++i) {
				for (int j = 0; j <= s; ++j) {
					const Rational &k = kernel(i, j);
					if (!k.is_zero()) {
						c += k * powers[static_cast<std::size_t>(r)][r - i] * powers[static_cast<std::size_t>(s)][s - j];
					}
				}
			}
			row.push_back((r + s) % 2 == 0 ? c : -c);
		}
		return row;
	});

	const Series2<Rational> sum = Series2<Rational>::from_function(
	    m, [&rows](int r, int s) { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]; });
	return -divide_by_x_minus_y(divide_by_x_minus_y(sum));
}

} // namespace hilbfock
