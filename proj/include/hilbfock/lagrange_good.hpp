#ifndef HILBFOCK_LAGRANGE_GOOD_HPP
#define HILBFOCK_LAGRANGE_GOOD_HPP

#include <array>

#include "hilbfock/series.hpp"

namespace hilbfock
{

// Coefficient extraction c_k in g = sum_k c_k f^k.
//
// With f_i = z_i u_i for unit series u_i, the residue
//   res_z g det(df/dz) / f^(k+1)
// becomes the plain coefficient [z^k] g det(df/dz) u^-(k+1), so no Laurent
// objects are needed.

/// Univariate case: c_k with g = sum_k c_k f^k, f = z u(z), u(0) a unit.
template <CoefficientRing R>
R lagrange_good_extract(const Series1<R> &g, const Series1<R> &f, int k)
{
	if (k < 0) {
		throw DomainError("Lagrange-Good extraction needs a non-negative index");
	}
	if (f.order() < 1 || !is_zero(f[0]) || !is_unit(f[1])) {
		throw DomainError("Lagrange-Good extraction needs f in z*A[[z]] with invertible linear coefficient");
	}
	const Series1<R> unit = shift_down(f, 1);
	const Series1<R> integrand = g * derivative(f) * pow(unit, -(k + 1));
	return integrand[k];
}

/// Bivariate case: c_(k1,k2) with g = sum c_k f1^k1 f2^k2, f_i in z_i * A[[z1, z2]].
template <CoefficientRing R>
R lagrange_good_extract(const Series2<R> &g, const std::array<Series2<R>, 2> &f, std::array<int, 2> k)
{
	if (k[0] < 0 || k[1] < 0) {
		throw DomainError("Lagrange-Good extraction needs a non-negative index");
	}
	if (f[0].order() < 1 || f[1].order() < 1 || !is_unit(f[0](1, 0)) || !is_unit(f[1](0, 1))) {
		throw DomainError("Lagrange-Good extraction needs invertible diagonal partial derivatives at the origin");
	}
	const Series2<R> u1 = shift_down_x(f[0]);
	const Series2<R> u2 = shift_down_y(f[1]);
	const Series2<R> jacobian = partial_x(f[0]) * partial_y(f[1]) - partial_y(f[0]) * partial_x(f[1]);

	auto inverse_power = [](const Series2<R> &u, int e) {
		const Series2<R> r = reciprocal(u);
		Series2<R> out = Series2<R>::one(u.order());
		for (int i = 0; i < e; ++i) {
			out = out * r;
		}
		return out;
	};
	const Series2<R> integrand = g * jacobian * inverse_power(u1, k[0] + 1) * inverse_power(u2, k[1] + 1);
	return integrand(k[0], k[1]);
}

} // namespace hilbfock

#endif
