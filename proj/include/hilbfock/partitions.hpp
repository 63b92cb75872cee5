#ifndef HILBFOCK_PARTITIONS_HPP
#define HILBFOCK_PARTITIONS_HPP

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "hilbfock/rational.hpp"

namespace hilbfock
{

/// Integer partition stored as its nonzero parts in weakly decreasing order.
///
/// Trailing zeros are accepted on construction and dropped.
class Partition
{
public:
	Partition() = default;
	Partition(std::initializer_list<int> parts);
	explicit Partition(std::vector<int> parts);

	const std::vector<int> &parts() const { return parts_; }
	int size() const { return size_; }
	int length() const { return static_cast<int>(parts_.size()); }
	bool empty() const { return parts_.empty(); }

	/// Length of row r (1-based); zero past the last row.
	int row(int r) const;
	/// Length of column c (1-based); zero past the first row.
	int column(int c) const;

	Partition conjugate() const;

	std::string str() const;

	friend bool operator==(const Partition &, const Partition &) = default;
	friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }

private:
	std::vector<int> parts_;
	int size_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Partition &p);

/// Box of a Young diagram, 1-based row and column.
struct Cell
{
	int row;
	int column;
};

/// All partitions of n, each once, in reverse lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

/// Cells of the diagram row by row, left to right.
std::vector<Cell> cells(const Partition &p);

bool contains(const Partition &p, Cell w);
int arm(const Partition &p, Cell w);
int leg(const Partition &p, Cell w);
int hook(const Partition &p, Cell w);

/// Hook lengths of all cells, sorted ascending.
std::vector<int> hook_lengths(const Partition &p);
Integer hook_product(const Partition &p);

/// prod over cells of alpha (l(w) + 1) + beta a(w).
Integer c_product(const Partition &p, long long alpha, long long beta);
/// prod over cells of alpha l(w) + beta (a(w) + 1).
Integer c_prime_product(const Partition &p, long long alpha, long long beta);

/// The 2|p| tangent weights {alpha (l+1) + beta a, -alpha l - beta (a+1)}.
struct WeightMultiset
{
	std::vector<long long> weights; // sorted ascending

	std::size_t size() const { return weights.size(); }
	friend bool operator==(const WeightMultiset &, const WeightMultiset &) = default;
};

WeightMultiset weight_multiset(const Partition &p, long long alpha, long long beta);
WeightMultiset multiset_union(const WeightMultiset &a, const WeightMultiset &b);

} // namespace hilbfock

#endif
