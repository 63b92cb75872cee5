#include <doctest.h>

#include <cstdlib>

#include "hilbfock/classes.hpp"
#include "hilbfock/closedform.hpp"
#include "hilbfock/errors.hpp"
#include "hilbfock/localisation.hpp"
#include "hilbfock/parallel.hpp"
#include "oracles.hpp"

using namespace hilbfock;
using oracle::poly;
using oracle::S1;
using oracle::S2;

TEST_CASE("fixed points")
{
	const auto counts = oracle::partition_counts(10);
	for (int n = 0; n <= 10; ++n) {
		long long expected = 0;
		for (int k = 0; k <= n; ++k) {
			expected += counts[static_cast<std::size_t>(k)] * counts[static_cast<std::size_t>(n - k)];
		}
		const auto points = fixed_points(n);
		CHECK(static_cast<long long>(points.size()) == expected);
		for (const auto &p : points) {
			CHECK(p.level() == n);
		}
	}
	const auto two = fixed_points(2);
	REQUIRE(two.size() == 5);
	CHECK(two[0].str() == "(2)|()");
	CHECK(two[1].str() == "(1,1)|()");
	CHECK(two[2].str() == "(1)|(1)");
	CHECK(two[3].str() == "()|(2)");
	CHECK(two[4].str() == "()|(1,1)");
}

TEST_CASE("tangent weights")
{
	for (long long gamma : {0, 1, 2, 3, 7}) {
		CHECK(tangent_weights({Partition{1}, Partition{}}, gamma).weights == std::vector<long long>{-1, 1});
	}
	CHECK(tangent_weights({Partition{}, Partition{1}}, 3).weights == std::vector<long long>{-1, 2});
	for (int n = 0; n <= 6; ++n) {
		for (const FixedPoint &p : fixed_points(n)) {
			std::vector<long long> hooks;
			for (const Partition *l : {&p.lambda0, &p.lambda1}) {
				for (int h : hook_lengths(*l)) {
					hooks.push_back(h);
					hooks.push_back(-h);
				}
			}
			std::sort(hooks.begin(), hooks.end());
			CHECK(tangent_weights(p, 2).weights == hooks);
		}
	}
}

TEST_CASE("equivariant class examples")
{
	const S1 f = chern_total_series(4);
	const auto zero = equivariant_class_coeffs(f, 2, 0);
	REQUIRE(zero.entries().size() == 1);
	CHECK(zero.entries()[0].value == 1);

	const auto at2 = equivariant_class_coeffs(f, 2, 1);
	CHECK(at2.at({Partition{1}, Partition{}}) == 0);
	CHECK(at2.at({Partition{}, Partition{1}}) == 0);
	CHECK(equivariant_class_coeffs(f, 3, 1).at({Partition{}, Partition{1}}) == 1);
	CHECK_THROWS_AS(at2.at({Partition{2}, Partition{}}), DomainError);

	std::mt19937 rng(23);
	for (long long gamma : {-2, 1, 3, 4, 5}) {
		const S1 g = oracle::random_class(rng, 3);
		CHECK(equivariant_class_coeffs(g, gamma, 1).at({Partition{}, Partition{1}}) == Rational(gamma - 2) * g[1]);
	}
	CHECK_THROWS_AS(equivariant_class_coeffs(f, 0, 2), DomainError);
	CHECK_THROWS_AS(equivariant_class_coeffs(f, 2, 5), PrecisionError);
	CHECK_THROWS_AS(equivariant_class_coeffs(poly({2, 1}, 4), 2, 1), DomainError);
}

TEST_CASE("gamma = 2 reduces to the hook-length formula")
{
	for (const S1 &f : {chern_total_series(8), todd_series(8)}) {
		const S1 big_f = f * reflected(f);
		for (int n = 0; n <= 8; ++n) {
			const auto v = equivariant_class_coeffs(f, 2, n);
			for (const auto &e : v.entries()) {
				CHECK(e.value == hook_form_coefficient(big_f, e.point));
			}
		}
	}
}

TEST_CASE("hook-form series for the total Chern class")
{
	const S2 z = z_series_hookform(chern_total_series(4), 4);
	CHECK(z(0, 0) == 1);
	CHECK(homogeneous_component(z, 2) == std::vector<Rational>{-3, -6, -3});
	CHECK(homogeneous_component(z, 4) == std::vector<Rational>{10, 20, 34, 20, 10});
	for (int d : {1, 3}) {
		for (const Rational &c : homogeneous_component(z, d)) {
			CHECK(c.is_zero());
		}
	}
	const S2 todd = z_series_hookform(todd_series(2), 2);
	CHECK(homogeneous_component(todd, 2) == std::vector<Rational>{Rational(-1, 4), Rational(-1, 2), Rational(-1, 4)});
}

TEST_CASE("residue form matches the hook-form sum")
{
	for (const S1 &f : {trivial_series(12), chern_total_series(12), todd_series(12)}) {
		const S2 residue = z_series_residue(f, 10);
		CHECK(residue == z_series_hookform(f, 10));
		CHECK(residue.is_symmetric());
		CHECK(residue(0, 0) == 1);
	}
	CHECK_THROWS_AS(z_series_residue(todd_series(6), 6), PrecisionError);
}

TEST_CASE("odd components vanish for random classes")
{
	std::mt19937 rng(29);
	for (int trial = 0; trial < 4; ++trial) {
		const S1 f = oracle::random_class(rng, 8);
		const S2 z = z_series_hookform(f, 6);
		for (int d : {1, 3, 5}) {
			for (const Rational &c : homogeneous_component(z, d)) {
				CHECK(c.is_zero());
			}
		}
		CHECK(z == z_series_residue(f, 6));
	}
}

TEST_CASE("results do not depend on the worker count")
{
	const S1 f = todd_series(10);
	setenv("HILBFOCK_THREADS", "1", 1);
	CHECK(worker_count() == 1);
	const S2 serial = z_series_hookform(f, 8);
	const auto serial_v = equivariant_class_coeffs(f, 3, 6);
	setenv("HILBFOCK_THREADS", "4", 1);
	CHECK(worker_count() == 4);
	CHECK(z_series_hookform(f, 8) == serial);
	CHECK(equivariant_class_coeffs(f, 3, 6).entries().size() == serial_v.entries().size());
	for (const auto &e : serial_v.entries()) {
		CHECK(equivariant_class_coeffs(f, 3, 6).at(e.point) == e.value);
	}
	unsetenv("HILBFOCK_THREADS");
}

TEST_CASE("parallel map keeps slot order and rethrows")
{
	setenv("HILBFOCK_THREADS", "3", 1);
	const auto squares = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
	for (std::size_t i = 0; i < squares.size(); ++i) {
		CHECK(squares[i] == static_cast<int>(i * i));
	}
	CHECK_THROWS_AS(parallel_map<int>(10,
	                                  [](std::size_t i) -> int {
		                                  if (i == 7) {
			                                  throw DomainError("boom");
		                                  }
		                                  return 0;
	                                  }),
	                DomainError);
	unsetenv("HILBFOCK_THREADS");
}
