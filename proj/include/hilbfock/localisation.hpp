#ifndef HILBFOCK_LOCALISATION_HPP
#define HILBFOCK_LOCALISATION_HPP

#include <string>
#include <vector>

#include "hilbfock/partitions.hpp"
#include "hilbfock/series.hpp"

namespace hilbfock
{

/// Torus fixed point of the Hilbert scheme of n points on X(gamma), indexed
/// by one partition per fixed point of the surface. Doubles as the basis
/// vector [lambda0, lambda1] of the localised equivariant cohomology.
struct FixedPoint
{
	Partition lambda0;
	Partition lambda1;

	int level() const { return lambda0.size() + lambda1.size(); }
	std::string str() const { return lambda0.str() + "|" + lambda1.str(); }

	friend bool operator==(const FixedPoint &, const FixedPoint &) = default;
	friend auto operator<=>(const FixedPoint &, const FixedPoint &) = default;
};

/// All fixed points at level n: |lambda0| runs from n down to 0, and each
/// partition runs in reverse lexicographic order.
std::vector<FixedPoint> fixed_points(int n);

/// W_{lambda0}(-1, -1) united with W_{lambda1}(gamma - 1, 1).
WeightMultiset tangent_weights(const FixedPoint &p, long long gamma);

struct EquivariantEntry
{
	FixedPoint point;
	Rational value;
};

/// Coefficients of an equivariant class of degree 2n in the fixed-point basis.
class EquivariantClassVector
{
public:
	EquivariantClassVector(int level, std::vector<EquivariantEntry> entries);

	int level() const { return level_; }
	const std::vector<EquivariantEntry> &entries() const { return entries_; }
	const Rational &at(const FixedPoint &p) const;

private:
	int level_;
	std::vector<EquivariantEntry> entries_;
};

/// Degree-n part of the equivariant class prod f(x_i) on X(gamma)^[n]:
///
///   [u^n] prod_{w in W} f(w u)  /  (c'_{lambda0}(-1,-1) c'_{lambda1}(gamma-1,1))
///
/// per fixed point. f needs constant term 1 and order >= n. Throws
/// DomainError when a denominator vanishes for the requested gamma.
EquivariantClassVector equivariant_class_coeffs(const Series1<Rational> &f, long long gamma, int n);

/// The gamma = 2 simplification for one fixed point, given F(x) = f(x) f(-x):
///
///   (-1)^{|lambda0|} [u^n] prod_{cells} F(h(w) u) / (h(lambda0) h(lambda1)).
Rational hook_form_coefficient(const Series1<Rational> &big_f, const FixedPoint &p);

/// Z(x, y) to total order N, summed over fixed points with both partitions of
/// length <= 2 (longer ones have vanishing Schur polynomials). f needs order >= N.
Series2<Rational> z_series_hookform(const Series1<Rational> &f, int order);

/// Z(x, y) to total order N from the coefficient-extraction form
///
///   Z = -1/(x-y)^2 sum_{r,s} (-x)^r (-y)^s [a^r b^s] G(a-b) G(b-a) F(a)^{r+1} F(b)^{s+1}
///
/// with F(z) = f(z) f(-z), G(z) = z / F(z). f needs order >= N + 2.
Series2<Rational> z_series_residue(const Series1<Rational> &f, int order);

} // namespace hilbfock

#endif
