#include "hilbfock/ring.hpp"

#include <ostream>

#include "hilbfock/errors.hpp"

namespace hilbfock
{

DualNumber inverse(const DualNumber &d)
{
	if (!is_unit(d)) {
		throw DomainError("dual number with zero real part is not invertible");
	}
	const Rational a = inverse(d.value());
	return {a, -d.infinitesimal() * a * a};
}

std::string to_string(const DualNumber &d)
{
	if (d.infinitesimal().is_zero()) {
		return d.value().str();
	}
	std::string out = d.value().is_zero() ? std::string() : d.value().str();
	if (d.infinitesimal().sign() < 0) {
		out += "-";
		out += (-d.infinitesimal()).str();
	} else {
		if (!out.empty()) {
			out += "+";
		}
		out += d.infinitesimal().str();
	}
	out += "*eps";
	return out;
}

std::ostream &operator<<(std::ostream &os, const DualNumber &d) { return os << to_string(d); }

} // namespace hilbfock
