#include "hilbfock/symfun.hpp"

#include <algorithm>

namespace hilbfock
{

namespace
{

void canonicalize(std::vector<CreationFactor> &factors)
{
	std::sort(factors.begin(), factors.end(), [](const CreationFactor &a, const CreationFactor &b) {
		return a.k != b.k ? a.k > b.k : a.tag < b.tag;
	});
}

Series2<Rational> x_power_plus_y_power(int k, int order)
{
	Series2<Rational> s = Series2<Rational>::monomial(Rational(1), k, 0, order);
	s.add_term(0, k, Rational(1));
	return s;
}

} // namespace

FockMonomial::FockMonomial(std::vector<CreationFactor> factors) : factors_(std::move(factors))
{
	for (const auto &f : factors_) {
		if (f.k < 1) {
			throw DomainError("creation operators are indexed by positive integers");
		}
	}
	canonicalize(factors_);
}

FockMonomial FockMonomial::fibre(const Partition &p)
{
	std::vector<CreationFactor> factors;
	for (int k : p.parts()) {
		factors.push_back({k, ClassTag::fibre});
	}
	return FockMonomial(std::move(factors));
}

int FockMonomial::cohomological_degree() const
{
	int deg = 0;
	for (const auto &f : factors_) {
		deg += f.tag == ClassTag::unit ? 2 * f.k - 2 : 2 * f.k;
	}
	return deg;
}

std::string FockMonomial::str() const
{
	std::string out;
	for (const auto &f : factors_) {
		out += "q_" + std::to_string(f.k) + (f.tag == ClassTag::unit ? "(1)" : "(h)") + " ";
	}
	return out + "|0>";
}

FockMonomial operator*(const FockMonomial &a, const FockMonomial &b)
{
	std::vector<CreationFactor> factors = a.factors_;
	factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
	return FockMonomial(std::move(factors));
}

Series2<Rational> schur_two_vars(const Partition &p, int order)
{
	if (order < 0) {
		order = p.size();
	}
	if (p.length() >= 3) {
		return Series2<Rational>::zero(order);
	}
	const int a = p.row(1);
	const int b = p.row(2);
	// (x^{a+1} y^b - y^{a+1} x^b) / (x - y)
	Series2<Rational> numerator = Series2<Rational>::monomial(Rational(1), a + 1, b, order + 1);
	numerator.add_term(b, a + 1, Rational(-1));
	return divide_by_x_minus_y(numerator);
}

Series2<Rational> power_sum_two_vars(const Partition &p, int order)
{
	if (order < 0) {
		order = p.size();
	}
	Series2<Rational> out = Series2<Rational>::one(order);
	for (int k : p.parts()) {
		out = out * x_power_plus_y_power(k, order);
	}
	return out;
}

Series2<Rational> rho(const FockMonomial &m, const Rational &scalar, int order)
{
	int degree = 0;
	for (const auto &f : m.factors()) {
		if (f.tag != ClassTag::fibre) {
			throw DomainError("rho is defined on middle-degree classes only");
		}
		degree += f.k;
	}
	if (order < 0) {
		order = degree;
	}
	Series2<Rational> out = Series2<Rational>::monomial(scalar, 0, 0, order);
	for (const auto &f : m.factors()) {
		out = out * x_power_plus_y_power(f.k, order);
	}
	return out;
}

FockMonomial psi_on_power_sums(const Partition &lambda0, const Partition &lambda1)
{
	return FockMonomial::fibre(lambda0) * FockMonomial::fibre(lambda1);
}

} // namespace hilbfock
