#include "hilbfock/partitions.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>

#include "hilbfock/errors.hpp"

namespace hilbfock
{

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts)
{
	while (!parts.empty() && parts.back() == 0) {
		parts.pop_back();
	}
	for (std::size_t i = 0; i < parts.size(); ++i) {
		if (parts[i] <= 0) {
			throw DomainError("partition parts must be positive");
		}
		if (i > 0 && parts[i] > parts[i - 1]) {
			throw DomainError("partition parts must be weakly decreasing");
		}
		size_ += parts[i];
	}
	parts_ = std::move(parts);
}

int Partition::row(int r) const { return r >= 1 && r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0; }

int Partition::column(int c) const
{
	if (c < 1) {
		return 0;
	}
	int n = 0;
	for (int p : parts_) {
		if (p >= c) {
			++n;
		}
	}
	return n;
}

Partition Partition::conjugate() const
{
	std::vector<int> out;
	for (int c = 1; c <= row(1); ++c) {
		out.push_back(column(c));
	}
	return Partition(std::move(out));
}

std::string Partition::str() const
{
	std::string out = "(";
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (i != 0) {
			out += ',';
		}
		out += std::to_string(parts_[i]);
	}
	return out + ")";
}

std::ostream &operator<<(std::ostream &os, const Partition &p) { return os << p.str(); }

namespace
{

void enumerate_into(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out)
{
	if (remaining == 0) {
		out.emplace_back(prefix);
		return;
	}
	for (int k = std::min(remaining, max_part); k >= 1; --k) {
		prefix.push_back(k);
		enumerate_into(remaining - k, k, prefix, out);
		prefix.pop_back();
	}
}

void require_cell(const Partition &p, Cell w)
{
	if (!contains(p, w)) {
		throw DomainError("cell (" + std::to_string(w.row) + "," + std::to_string(w.column) + ") is not in the diagram of " +
		                  p.str());
	}
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
	if (n < 0) {
		throw DomainError("cannot enumerate partitions of a negative integer");
	}
	std::vector<Partition> out;
	std::vector<int> prefix;
	enumerate_into(n, n, prefix, out);
	return out;
}

std::vector<Cell> cells(const Partition &p)
{
	std::vector<Cell> out;
	out.reserve(static_cast<std::size_t>(p.size()));
	for (int r = 1; r <= p.length(); ++r) {
		for (int c = 1; c <= p.row(r); ++c) {
			out.push_back({r, c});
		}
	}
	return out;
}

bool contains(const Partition &p, Cell w) { return w.row >= 1 && w.column >= 1 && w.column <= p.row(w.row); }

int arm(const Partition &p, Cell w)
{
	require_cell(p, w);
	return p.row(w.row) - w.column;
}

int leg(const Partition &p, Cell w)
{
	require_cell(p, w);
	return p.column(w.column) - w.row;
}

int hook(const Partition &p, Cell w) { return arm(p, w) + leg(p, w) + 1; }

std::vector<int> hook_lengths(const Partition &p)
{
	std::vector<int> out;
	for (const Cell &w : cells(p)) {
		out.push_back(hook(p, w));
	}
	std::sort(out.begin(), out.end());
	return out;
}

Integer hook_product(const Partition &p)
{
	Integer r = 1;
	for (int h : hook_lengths(p)) {
		r *= h;
	}
	return r;
}

Integer c_product(const Partition &p, long long alpha, long long beta)
{
	Integer r = 1;
	for (const Cell &w : cells(p)) {
		r *= Integer(static_cast<signed long>(alpha * (leg(p, w) + 1) + beta * arm(p, w)));
	}
	return r;
}

Integer c_prime_product(const Partition &p, long long alpha, long long beta)
{
	Integer r = 1;
	for (const Cell &w : cells(p)) {
		r *= Integer(static_cast<signed long>(alpha * leg(p, w) + beta * (arm(p, w) + 1)));
	}
	return r;
}

WeightMultiset weight_multiset(const Partition &p, long long alpha, long long beta)
{
	WeightMultiset m;
	for (const Cell &w : cells(p)) {
		const long long a = arm(p, w);
		const long long l = leg(p, w);
		m.weights.push_back(alpha * (l + 1) + beta * a);
		m.weights.push_back(-alpha * l - beta * (a + 1));
	}
	std::sort(m.weights.begin(), m.weights.end());
	return m;
}

WeightMultiset multiset_union(const WeightMultiset &a, const WeightMultiset &b)
{
	WeightMultiset m;
	std::merge(a.weights.begin(), a.weights.end(), b.weights.begin(), b.weights.end(), std::back_inserter(m.weights));
	return m;
}

} // namespace hilbfock
