#include "hilbfock/classes.hpp"

namespace hilbfock
{

namespace
{

using S = Series1<Rational>;

S exp_of_scaled_variable(const Rational &c, int order) { return series_exp(S::variable(order) * c); }

// sinh(c x) / x, known to the given order.
S sinh_over_x(const Rational &c, int order)
{
	const S sinh = (exp_of_scaled_variable(c, order + 1) - exp_of_scaled_variable(-c, order + 1)) * Rational(1, 2);
	return shift_down(sinh, 1);
}

} // namespace

MultiplicativeClass::MultiplicativeClass(std::string name_, Series1<Rational> f_) : name(std::move(name_)), f(std::move(f_))
{
	if (!(f[0] == Rational(1))) {
		throw DomainError("class '" + name + "' does not have constant term 1");
	}
}

S trivial_series(int order) { return S::one(order); }

S chern_total_series(int order) { return S::polynomial({Rational(1), Rational(1)}, order); }

S todd_series(int order)
{
	// (1 - e^{-x}) / x
	const S numerator = S::one(order + 1) - exp_of_scaled_variable(Rational(-1), order + 1);
	return reciprocal(shift_down(numerator, 1));
}

S l_genus_series(int order)
{
	const S cosh = (exp_of_scaled_variable(Rational(1), order) + exp_of_scaled_variable(Rational(-1), order)) *
	               Rational(1, 2);
	return cosh * reciprocal(sinh_over_x(Rational(1), order));
}

S a_hat_series(int order) { return reciprocal(sinh_over_x(Rational(1, 2), order) * Rational(2)); }

const std::vector<std::string> &preset_names()
{
	static const std::vector<std::string> names{"trivial", "chern-total", "todd", "l-genus", "a-hat"};
	return names;
}

MultiplicativeClass preset_class(std::string_view name, int order)
{
	if (name == "trivial") {
		return {"trivial", trivial_series(order)};
	}
	if (name == "chern-total") {
		return {"chern-total", chern_total_series(order)};
	}
	if (name == "todd") {
		return {"todd", todd_series(order)};
	}
	if (name == "l-genus") {
		return {"l-genus", l_genus_series(order)};
	}
	if (name == "a-hat") {
		return {"a-hat", a_hat_series(order)};
	}
	throw DomainError("unknown class '" + std::string(name) + "'");
}

MultiplicativeClass class_from_coefficients(const std::vector<Rational> &coefficients, int order)
{
	std::vector<Rational> all{Rational(1)};
	all.insert(all.end(), coefficients.begin(), coefficients.end());
	std::string name;
	for (std::size_t i = 0; i < coefficients.size(); ++i) {
		name += (i == 0 ? "" : ",") + coefficients[i].str();
	}
	return {name, S::polynomial(all, order)};
}

} // namespace hilbfock
