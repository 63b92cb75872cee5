#include "hilbfock/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbfock/classes.hpp"
#include "hilbfock/closedform.hpp"
#include "hilbfock/localisation.hpp"

namespace hilbfock
{

namespace
{

using json = nlohmann::ordered_json;

struct UsageError : Error
{
	using Error::Error;
};

struct ResourceLimit : Error
{
	using Error::Error;
};

// A class given on the command line: a preset name or "c1,c2,...".
struct ClassSpec
{
	std::string text;
	bool chern_character = false;
	bool preset = false;
	std::vector<Rational> coefficients;

	MultiplicativeClass at_order(int order) const
	{
		if (chern_character) {
			throw UsageError("chern-character is additive and has no multiplicative series");
		}
		if (preset) {
			return preset_class(text, order);
		}
		return class_from_coefficients(coefficients, order);
	}
};

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	std::string piece;
	std::istringstream in(s);
	while (std::getline(in, piece, sep)) {
		out.push_back(piece);
	}
	if (!s.empty() && s.back() == sep) {
		out.emplace_back();
	}
	return out;
}

ClassSpec parse_class_spec(const std::string &text)
{
	ClassSpec spec;
	spec.text = text;
	if (text == "chern-character") {
		spec.chern_character = true;
		return spec;
	}
	const auto &names = preset_names();
	if (std::find(names.begin(), names.end(), text) != names.end()) {
		spec.preset = true;
		return spec;
	}
	if (text.empty()) {
		throw UsageError("empty class");
	}
	try {
		for (const std::string &c : split(text, ',')) {
			spec.coefficients.push_back(Rational::parse(c));
		}
	} catch (const ParseError &e) {
		throw UsageError("class '" + text + "' is neither a preset nor a coefficient list (" + e.what() + ")");
	}
	return spec;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- table ----------------------------------------------------------------

struct TableOptions
{
	std::string class_text;
	int max_degree = 12;
	std::string target = "tangent";
	std::string basis = "theorem";
	std::string format = "json";
};

CoefficientTables compute_tables(const TableOptions &o, const ClassSpec &spec, std::string &target)
{
	target = o.target;
	if (spec.chern_character) {
		if (target == "tautological") {
			throw UsageError("the chern-character class has no tautological variant here");
		}
		target = "chern-character";
	} else if (target == "chern-character") {
		throw UsageError("--target chern-character requires --class chern-character");
	}
	if (target == "tautological" && o.basis == "universal") {
		throw UsageError("the universal basis applies to tangent-bundle tables only");
	}

	CoefficientTables t = [&]() -> CoefficientTables {
		if (target == "chern-character") {
			return chern_character_tables(o.max_degree);
		}
		const MultiplicativeClass c = spec.at_order(o.max_degree);
		if (target == "tautological") {
			return taut_tables(c.f, o.max_degree);
		}
		return {a_k_table(c.f, o.max_degree), a_kl_table(c.f, o.max_degree)};
	}();
	if (o.basis == "universal") {
		t.a_kl = to_universal(t.a_kl);
	}
	return t;
}

void write_table_json(std::ostream &out, const std::string &name, int max_degree, const CoefficientTables &t)
{
	json doc;
	doc["class"] = name;
	doc["max_degree"] = max_degree;
	doc["a_k"] = json::array();
	for (std::size_t i = 0; i < t.a_k.size(); ++i) {
		doc["a_k"].push_back({{"k", i + 1}, {"value", t.a_k[i].str()}});
	}
	doc["a_kl"] = json::array();
	for (const TableEntry &e : t.a_kl.rows()) {
		doc["a_kl"].push_back({{"k", e.k}, {"l", e.l}, {"value", e.value.str()}});
	}
	out << doc.dump(2) << '\n';
}

void write_table_csv(std::ostream &out, const CoefficientTables &t)
{
	out << "k,l,value\n";
	for (std::size_t i = 0; i < t.a_k.size(); ++i) {
		out << i + 1 << ",," << t.a_k[i].str() << '\n';
	}
	for (const TableEntry &e : t.a_kl.rows()) {
		out << e.k << ',' << e.l << ',' << e.value.str() << '\n';
	}
}

void write_table_pretty(std::ostream &out, const std::string &name, const std::string &target,
                        const std::string &basis, const CoefficientTables &t)
{
	out << "class " << name << ", " << target << ", " << basis << " basis, degree <= " << t.a_kl.max_degree()
	    << "\n\n";
	out << std::left << std::setw(8) << "k" << "a_k\n";
	for (std::size_t i = 0; i < t.a_k.size(); ++i) {
		out << std::setw(8) << i + 1 << t.a_k[i].str() << '\n';
	}
	int degree = 0;
	for (const TableEntry &e : t.a_kl.rows()) {
		if (e.k + e.l != degree) {
			degree = e.k + e.l;
			out << "\nk+l = " << degree << '\n';
		}
		out << "  " << std::setw(10) << ("(" + std::to_string(e.k) + "," + std::to_string(e.l) + ")") << e.value.str()
		    << '\n';
	}
	out << std::right;
}

int cmd_table(const TableOptions &o, std::ostream &out)
{
	if (o.max_degree < 2) {
		throw UsageError("--max-degree must be at least 2");
	}
	if (o.max_degree > table_degree_limit) {
		throw ResourceLimit("--max-degree " + std::to_string(o.max_degree) + " exceeds the limit of " +
		                    std::to_string(table_degree_limit));
	}
	const ClassSpec spec = parse_class_spec(o.class_text);
	std::string target;
	const CoefficientTables t = compute_tables(o, spec, target);
	if (o.format == "json") {
		write_table_json(out, spec.text, o.max_degree, t);
	} else if (o.format == "csv") {
		write_table_csv(out, t);
	} else {
		write_table_pretty(out, spec.text, target, o.basis, t);
	}
	return exit_ok;
}

// ---- verify ---------------------------------------------------------------

using CheckOutcome = std::optional<std::string>; // nullopt on success, else what differed

class Report
{
public:
	explicit Report(std::ostream &out) : out_(out) {}

	void run(const std::string &name, const std::function<CheckOutcome()> &check)
	{
		const auto start = std::chrono::steady_clock::now();
		CheckOutcome failure;
		try {
			failure = check();
		} catch (const Error &e) {
			failure = std::string("error: ") + e.what();
		} catch (const InternalError &e) {
			failure = std::string("internal error: ") + e.what();
		}
		const double elapsed = seconds_since(start);
		out_ << (failure ? "FAIL  " : "PASS  ") << name << "  (" << std::fixed << std::setprecision(3) << elapsed
		     << " s)\n";
		out_.unsetf(std::ios::floatfield);
		if (failure) {
			out_ << "      " << *failure << '\n';
			ok_ = false;
		}
	}

	bool ok() const { return ok_; }

private:
	std::ostream &out_;
	bool ok_ = true;
};

CheckOutcome first_difference(const Series2<Rational> &a, const std::string &name_a, const Series2<Rational> &b,
                              const std::string &name_b)
{
	const int order = std::min(a.order(), b.order());
	for (int d = 0; d <= order; ++d) {
		for (int i = d; i >= 0; --i) {
			const int j = d - i;
			if (a(i, j) != b(i, j)) {
				return "first difference at x^" + std::to_string(i) + " y^" + std::to_string(j) + ": " + name_a +
				       " = " + a(i, j).str() + ", " + name_b + " = " + b(i, j).str();
			}
		}
	}
	return std::nullopt;
}

CheckOutcome first_difference(const Series1<Rational> &a, const std::string &name_a, const Series1<Rational> &b,
                              const std::string &name_b)
{
	const int order = std::min(a.order(), b.order());
	for (int k = 0; k <= order; ++k) {
		if (a[k] != b[k]) {
			return "first difference at x^" + std::to_string(k) + ": " + name_a + " = " + a[k].str() + ", " + name_b +
			       " = " + b[k].str();
		}
	}
	return std::nullopt;
}

CheckOutcome first_nonzero(const Series2<Rational> &s, const std::string &name, bool odd_only)
{
	for (int d = 0; d <= s.order(); ++d) {
		if (odd_only && d % 2 == 0) {
			continue;
		}
		for (int i = d; i >= 0; --i) {
			if (!s(i, d - i).is_zero()) {
				return name + " has nonzero x^" + std::to_string(i) + " y^" + std::to_string(d - i) + " coefficient " +
				       s(i, d - i).str();
			}
		}
	}
	return std::nullopt;
}

CheckOutcome asymmetry(const Series2<Rational> &s, const std::string &name)
{
	return first_difference(s, name, s.swapped(), name + " with x, y exchanged");
}

void verify_multiplicative(Report &report, const MultiplicativeClass &c, int order)
{
	const Series1<Rational> &f = c.f;
	const Series2<Rational> closed = z_closed(f, order);

	report.run("closed form = hook-form localisation sum", [&]() {
		return first_difference(closed, "closed", z_series_hookform(f, order), "hook-form");
	});
	report.run("closed form = residue form", [&]() {
		return first_difference(closed, "closed", z_series_residue(f, order), "residue");
	});
	report.run("log Z = sum a_kl (x^k + y^k)(x^l + y^l)", [&]() {
		return first_difference(series_log(closed), "log Z", fibre_exponent(a_kl_series(f, order)), "a_kl exponent");
	});
	report.run("parity: a_k, a_kl and Z vanish in the wrong degrees", [&]() -> CheckOutcome {
		const std::vector<Rational> a_k = a_k_table(f, order);
		for (std::size_t i = 1; i < a_k.size(); i += 2) {
			if (!a_k[i].is_zero()) {
				return "a_" + std::to_string(i + 1) + " = " + a_k[i].str();
			}
		}
		if (auto bad = first_nonzero(a_kl_series(f, order), "a_kl series", true)) {
			return bad;
		}
		return first_nonzero(closed, "Z", true);
	});
	report.run("symmetry: a_kl = a_lk and Z(x, y) = Z(y, x)", [&]() -> CheckOutcome {
		if (auto bad = asymmetry(a_kl_series(f, order), "a_kl series")) {
			return bad;
		}
		return asymmetry(closed, "Z");
	});
	report.run("round trips: G(g(x)) = x, g(G(x)) = x, exp(log Z) = Z", [&]() -> CheckOutcome {
		const Series1<Rational> big = big_g(f).truncated(order + 1);
		const Series1<Rational> g = compositional_inverse(big);
		const Series1<Rational> x = Series1<Rational>::variable(order + 1);
		if (auto bad = first_difference(compose(big, g), "G(g(x))", x, "x")) {
			return bad;
		}
		if (auto bad = first_difference(compose(g, big), "g(G(x))", x, "x")) {
			return bad;
		}
		return first_difference(series_exp(series_log(closed)), "exp(log Z)", closed, "Z");
	});
	const int levels = std::min(order, 8);
	report.run("gamma = 2 localisation = hook-length formula, n <= " + std::to_string(levels),
	           [&]() -> CheckOutcome {
		           const Series1<Rational> big_f = f.truncated(levels) * reflected(f.truncated(levels));
		           for (int n = 0; n <= levels; ++n) {
			           const EquivariantClassVector v = equivariant_class_coeffs(f, 2, n);
			           for (const EquivariantEntry &e : v.entries()) {
				           const Rational hook = hook_form_coefficient(big_f, e.point);
				           if (e.value != hook) {
					           return "fixed point " + e.point.str() + ": localisation = " + e.value.str() +
					                  ", hook-length = " + hook.str();
				           }
			           }
		           }
		           return std::nullopt;
	           });
}

void verify_chern_character(Report &report, int order)
{
	const CoefficientTables direct = chern_character_tables(order);
	for (int n = 2; n <= order; n += 2) {
		report.run("dual-number derivation = closed formula, degree " + std::to_string(n), [&, n]() -> CheckOutcome {
			for (const TableEntry &e : corollary_via_dual(n)) {
				if (e.value != direct.a_kl.at(e.k, e.l)) {
					return "a_" + std::to_string(e.k) + "," + std::to_string(e.l) + ": dual = " + e.value.str() +
					       ", closed formula = " + direct.a_kl.at(e.k, e.l).str();
				}
			}
			return std::nullopt;
		});
	}
	report.run("parity: a_k and a_kl vanish in the wrong degrees", [&]() -> CheckOutcome {
		for (std::size_t i = 1; i < direct.a_k.size(); i += 2) {
			if (!direct.a_k[i].is_zero()) {
				return "a_" + std::to_string(i + 1) + " = " + direct.a_k[i].str();
			}
		}
		for (const TableEntry &e : direct.a_kl.rows()) {
			if ((e.k + e.l) % 2 != 0 && !e.value.is_zero()) {
				return "a_" + std::to_string(e.k) + "," + std::to_string(e.l) + " = " + e.value.str();
			}
		}
		return std::nullopt;
	});
}

int cmd_verify(const std::string &class_text, int order, std::ostream &out)
{
	if (order < 2) {
		throw UsageError("--order must be at least 2");
	}
	if (order > verify_order_limit) {
		throw ResourceLimit("--order " + std::to_string(order) + " exceeds the limit of " +
		                    std::to_string(verify_order_limit));
	}
	const ClassSpec spec = parse_class_spec(class_text);
	out << "verify " << spec.text << " to order " << order << '\n';
	Report report(out);
	if (spec.chern_character) {
		verify_chern_character(report, order);
	} else {
		// the residue form reads F two orders beyond the target
		verify_multiplicative(report, spec.at_order(order + 2), order);
	}
	out << (report.ok() ? "PASS" : "FAIL") << '\n';
	return report.ok() ? exit_ok : exit_verification_failed;
}

// ---- equivariant ----------------------------------------------------------

struct EquivariantOptions
{
	std::string class_text;
	long long gamma = 2;
	int n = 1;
	int level_bound = default_level_bound;
	std::string format = "json";
};

std::string csv_quoted(const std::string &s) { return '"' + s + '"'; }

int cmd_equivariant(const EquivariantOptions &o, std::ostream &out)
{
	if (o.n < 0) {
		throw UsageError("-n must be non-negative");
	}
	if (o.n > o.level_bound) {
		throw ResourceLimit("level " + std::to_string(o.n) + " exceeds the bound " + std::to_string(o.level_bound));
	}
	const ClassSpec spec = parse_class_spec(o.class_text);
	const EquivariantClassVector v = equivariant_class_coeffs(spec.at_order(o.n).f, o.gamma, o.n);

	if (o.format == "json") {
		json doc;
		doc["class"] = spec.text;
		doc["gamma"] = o.gamma;
		doc["n"] = o.n;
		doc["coefficients"] = json::array();
		for (const EquivariantEntry &e : v.entries()) {
			doc["coefficients"].push_back(
			    {{"lambda0", e.point.lambda0.str()}, {"lambda1", e.point.lambda1.str()}, {"value", e.value.str()}});
		}
		out << doc.dump(2) << '\n';
	} else if (o.format == "csv") {
		out << "lambda0,lambda1,value\n";
		for (const EquivariantEntry &e : v.entries()) {
			out << csv_quoted(e.point.lambda0.str()) << ',' << csv_quoted(e.point.lambda1.str()) << ','
			    << e.value.str() << '\n';
		}
	} else {
		out << "class " << spec.text << ", gamma = " << o.gamma << ", n = " << o.n << "\n\n";
		for (const EquivariantEntry &e : v.entries()) {
			out << "  " << std::left << std::setw(24) << e.point.str() << std::right << e.value.str() << '\n';
		}
	}
	return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Characteristic classes of Hilbert schemes of points on X(gamma)", "hilbfock"};
	app.require_subcommand(1);
	const std::vector<std::string> formats{"json", "csv", "pretty"};

	TableOptions table;
	auto *table_cmd = app.add_subcommand("table", "coefficient tables a_k and a_kl");
	table_cmd->add_option("--class", table.class_text, "preset name or coefficient list c1,c2,...")->required();
	table_cmd->add_option("--max-degree", table.max_degree, "largest total degree")->capture_default_str();
	table_cmd->add_option("--target", table.target)
	    ->check(CLI::IsMember({"tangent", "tautological", "chern-character"}))
	    ->capture_default_str();
	table_cmd->add_option("--basis", table.basis)->check(CLI::IsMember({"theorem", "universal"}))->capture_default_str();
	table_cmd->add_option("--format", table.format)->check(CLI::IsMember(formats))->capture_default_str();

	std::string verify_class;
	int verify_order = 10;
	auto *verify_cmd = app.add_subcommand("verify", "cross-check the closed forms against localisation");
	verify_cmd->add_option("--class", verify_class, "preset name or coefficient list c1,c2,...")->required();
	verify_cmd->add_option("--order", verify_order, "total degree to check")->capture_default_str();

	EquivariantOptions equivariant;
	auto *equivariant_cmd = app.add_subcommand("equivariant", "fixed-point coefficients of the equivariant class");
	equivariant_cmd->add_option("--class", equivariant.class_text, "preset name or coefficient list c1,c2,...")
	    ->required();
	equivariant_cmd->add_option("--gamma", equivariant.gamma)->capture_default_str();
	equivariant_cmd->add_option("-n,--n,--level", equivariant.n, "number of points")->capture_default_str();
	equivariant_cmd->add_option("--level-bound", equivariant.level_bound)->capture_default_str();
	equivariant_cmd->add_option("--format", equivariant.format)->check(CLI::IsMember(formats))->capture_default_str();

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if (*table_cmd) {
			return cmd_table(table, out);
		}
		if (*verify_cmd) {
			return cmd_verify(verify_class, verify_order, out);
		}
		return cmd_equivariant(equivariant, out);
	} catch (const UsageError &e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	} catch (const ResourceLimit &e) {
		err << "error: " << e.what() << '\n';
		return exit_resource_limit;
	} catch (const DomainError &e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	} catch (const ParseError &e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << '\n';
		return exit_verification_failed;
	}
}

} // namespace hilbfock
