#ifndef HILBFOCK_SYMFUN_HPP
#define HILBFOCK_SYMFUN_HPP

#include <string>
#include <vector>

#include "hilbfock/partitions.hpp"
#include "hilbfock/series.hpp"

namespace hilbfock
{

// Symmetric functions specialised to two variables (x, y, 0, 0, ...), and the
// bookkeeping that sends creation-operator monomials on the vacuum to
// polynomials in x and y.

enum class ClassTag
{
	unit,  // the class 1 of the surface
	fibre, // the fibre class h
};

struct CreationFactor
{
	int k;
	ClassTag tag;

	friend auto operator<=>(const CreationFactor &, const CreationFactor &) = default;
};

/// q_{k1}(tag1) ... q_{kr}(tagr)|0>, stored as the sorted multiset of factors.
class FockMonomial
{
public:
	FockMonomial() = default;
	explicit FockMonomial(std::vector<CreationFactor> factors);

	static FockMonomial vacuum() { return {}; }
	/// q_{p1}(h) q_{p2}(h) ... |0>.
	static FockMonomial fibre(const Partition &p);

	const std::vector<CreationFactor> &factors() const { return factors_; }
	bool is_vacuum() const { return factors_.empty(); }

	/// 2k - 2 per unit factor, 2k per fibre factor.
	int cohomological_degree() const;

	std::string str() const;

	friend FockMonomial operator*(const FockMonomial &a, const FockMonomial &b);
	friend bool operator==(const FockMonomial &, const FockMonomial &) = default;

private:
	std::vector<CreationFactor> factors_; // descending k, unit before fibre
};

/// s_p(x, y) as an exact polynomial known to the given total order
/// (default |p|). Zero for length >= 3.
Series2<Rational> schur_two_vars(const Partition &p, int order = -1);

/// p_p(x, y) = prod_i (x^{p_i} + y^{p_i}).
Series2<Rational> power_sum_two_vars(const Partition &p, int order = -1);

/// scalar * prod (x^k + y^k) over the factors; all factors must be fibre-tagged.
Series2<Rational> rho(const FockMonomial &m, const Rational &scalar, int order = -1);

/// p_{lambda0} (x) p_{lambda1} -> q_{lambda0_1}(h) ... q_{lambda1_1}(h) ... |0>.
FockMonomial psi_on_power_sums(const Partition &lambda0, const Partition &lambda1);

} // namespace hilbfock

#endif
