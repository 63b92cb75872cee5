#include "hilbfock/closedform.hpp"

#include "hilbfock/ring.hpp"

namespace hilbfock
{

std::string to_string(TableKind kind)
{
	switch (kind) {
	case TableKind::theorem_a_kl:
		return "theorem";
	case TableKind::universal_a_kl:
		return "universal";
	case TableKind::chern_character:
		return "chern-character";
	case TableKind::tautological:
		return "tautological";
	}
	return "unknown";
}

CoeffTable::CoeffTable(TableKind kind, int max_degree) : kind_(kind), max_degree_(max_degree)
{
	if (max_degree < 0) {
		throw DomainError("negative table degree");
	}
}

CoeffTable CoeffTable::from_series(TableKind kind, const Series2<Rational> &s)
{
	CoeffTable t(kind, s.order());
	for (int d = 2; d <= s.order(); ++d) {
		for (int l = 1; 2 * l <= d; ++l) {
			t.set(d - l, l, s(d - l, l));
		}
	}
	return t;
}

void CoeffTable::set(int k, int l, Rational value)
{
	if (k < l) {
		std::swap(k, l);
	}
	if (l < 1) {
		throw DomainError("table indices start at 1");
	}
	if (k + l > max_degree_) {
		throw PrecisionError("entry (" + std::to_string(k) + "," + std::to_string(l) + ") beyond table degree " +
		                     std::to_string(max_degree_));
	}
	entries_[{k, l}] = std::move(value);
}

const Rational &CoeffTable::at(int k, int l) const
{
	if (k < l) {
		std::swap(k, l);
	}
	if (l < 1) {
		throw DomainError("table indices start at 1");
	}
	const auto it = entries_.find({k, l});
	if (it == entries_.end()) {
		throw PrecisionError("entry (" + std::to_string(k) + "," + std::to_string(l) + ") not in table of degree " +
		                     std::to_string(max_degree_));
	}
	return it->second;
}

std::vector<TableEntry> CoeffTable::rows() const
{
	std::vector<TableEntry> out;
	for (int d = 2; d <= max_degree_; ++d) {
		for (int k = d - 1; 2 * k >= d; --k) {
			const auto it = entries_.find({k, d - k});
			if (it != entries_.end()) {
				out.push_back({k, d - k, it->second});
			}
		}
	}
	return out;
}

std::vector<Rational> a_k_table(const Series1<Rational> &f, int max_degree)
{
	return a_k_from_inverse(small_g(f, max_degree));
}

CoeffTable a_kl_table(const Series1<Rational> &f, int max_degree)
{
	return CoeffTable::from_series(TableKind::theorem_a_kl, a_kl_series(f, max_degree));
}

CoefficientTables chern_character_tables(int max_degree)
{
	CoefficientTables out{{}, CoeffTable(TableKind::chern_character, max_degree)};
	for (int k = 1; k <= max_degree; ++k) {
		out.a_k.push_back(k % 2 == 1 ? Rational(Integer(2), factorial(static_cast<unsigned>(k))) : Rational(0));
	}
	for (int d = 2; d <= max_degree; ++d) {
		for (int l = 1; 2 * l <= d; ++l) {
			const int k = d - l;
			if (d % 2 != 0) {
				out.a_kl.set(k, l, Rational(0));
				continue;
			}
			const Integer b = binomial(static_cast<unsigned>(d), static_cast<unsigned>(k));
			const Integer bracket = k % 2 == 0 ? Integer(1 - b) : Integer(1 + b);
			out.a_kl.set(k, l, Rational(2 * bracket, factorial(static_cast<unsigned>(d))));
		}
	}
	return out;
}

Series2<Rational> dual_log_infinitesimal(int n)
{
	if (n < 1) {
		throw DomainError("dual-number class needs n >= 1");
	}
	const Series1<DualNumber> f =
	    Series1<DualNumber>::polynomial({DualNumber(1)}, n) + Series1<DualNumber>::monomial(DualNumber::epsilon(), n, n);
	const Series2<DualNumber> log_series = a_kl_series(f, n);
	return Series2<Rational>::from_function(n, [&log_series](int i, int j) {
		const DualNumber &c = log_series(i, j);
		if (!c.value().is_zero()) {
			throw InternalError("dual-number log series has a nonzero real part");
		}
		return c.infinitesimal();
	});
}

std::vector<TableEntry> corollary_via_dual(int n)
{
	if (n < 2 || n % 2 != 0) {
		throw DomainError("the dual-number derivation needs an even degree n >= 2");
	}
	// prod (1 + eps x_i^n) = 1 + eps n! ch_n
	const Series2<Rational> eps_part = dual_log_infinitesimal(n);
	const Rational normalisation(Integer(1), factorial(static_cast<unsigned>(n)));
	std::vector<TableEntry> out;
	for (int k = n - 1; 2 * k >= n; --k) {
		out.push_back({k, n - k, eps_part(k, n - k) * normalisation});
	}
	return out;
}

CoeffTable to_universal(const CoeffTable &t)
{
	if (t.kind() != TableKind::theorem_a_kl && t.kind() != TableKind::chern_character) {
		throw DomainError("universal coefficients are defined for tangent-bundle tables only");
	}
	CoeffTable out(TableKind::universal_a_kl, t.max_degree());
	for (const TableEntry &e : t.rows()) {
		out.set(e.k, e.l, e.k == e.l ? -e.value * Rational(1, 2) : -e.value);
	}
	return out;
}

Series1<Rational> taut_inverse(const Series1<Rational> &f, int order)
{
	detail::require_order(f.order(), order - 1);
	if (!(f[0] == Rational(1))) {
		throw DomainError("a multiplicative class needs a series with constant term 1");
	}
	const Series1<Rational> target = shift_up(reciprocal(reflected(f)), 1).truncated(order);
	return compositional_inverse(target);
}

Series2<Rational> taut_log_series(const Series1<Rational> &f, int order)
{
	detail::require_order(f.order(), order);
	const Series1<Rational> g = taut_inverse(f, order + 1);
	const Series2<Rational> quotient = divide_by_x_minus_y(detail::difference(g));
	const Series1<Rational> g_over_x = shift_down(g, 1);
	const Series2<Rational> units = Series2<Rational>::from_x(g_over_x) * Series2<Rational>::from_y(g_over_x);
	return series_log(quotient * reciprocal(units));
}

CoefficientTables taut_tables(const Series1<Rational> &f, int max_degree)
{
	std::vector<Rational> a_k = a_k_from_inverse(taut_inverse(f, max_degree));
	return {std::move(a_k), CoeffTable::from_series(TableKind::tautological, taut_log_series(f, max_degree))};
}

} // namespace hilbfock
