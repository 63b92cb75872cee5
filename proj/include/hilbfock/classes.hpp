#ifndef HILBFOCK_CLASSES_HPP
#define HILBFOCK_CLASSES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hilbfock/series.hpp"

namespace hilbfock
{

/// A multiplicative characteristic class prod f(x_i), with f known to some order.
struct MultiplicativeClass
{
	MultiplicativeClass(std::string name, Series1<Rational> f);

	std::string name;
	Series1<Rational> f;
};

Series1<Rational> trivial_series(int order);
/// 1 + x
Series1<Rational> chern_total_series(int order);
/// x / (1 - e^{-x})
Series1<Rational> todd_series(int order);
/// x / tanh(x)
Series1<Rational> l_genus_series(int order);
/// (x/2) / sinh(x/2)
Series1<Rational> a_hat_series(int order);

/// Names accepted by preset_class.
const std::vector<std::string> &preset_names();

/// One of trivial, chern-total, todd, l-genus, a-hat, known to the given order.
MultiplicativeClass preset_class(std::string_view name, int order);

/// f = 1 + c_1 x + c_2 x^2 + ... from its non-constant coefficients.
MultiplicativeClass class_from_coefficients(const std::vector<Rational> &coefficients, int order);

} // namespace hilbfock

#endif
