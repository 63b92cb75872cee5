#ifndef HILBFOCK_PARALLEL_HPP
#define HILBFOCK_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hilbfock
{

/// Worker threads for data-parallel loops: HILBFOCK_THREADS if set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

/// out[i] = fn(i) for i in [0, n), evaluated on up to worker_count() threads.
///
/// Each result lands in its own slot, so any reduction done afterwards in
/// index order is independent of scheduling. The first exception thrown by
/// fn is rethrown on the calling thread.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn &&fn)
{
	std::vector<std::optional<T>> slots(n);
	const std::size_t threads = std::min<std::size_t>(worker_count(), n);
	if (threads <= 1) {
		for (std::size_t i = 0; i < n; ++i) {
			slots[i].emplace(fn(i));
		}
	} else {
		std::atomic<std::size_t> next{0};
		std::exception_ptr failure;
		std::mutex failure_mutex;
		auto work = [&] {
			for (std::size_t i = next++; i < n; i = next++) {
				try {
					slots[i].emplace(fn(i));
				} catch (...) {
					std::lock_guard lock(failure_mutex);
					if (!failure) {
						failure = std::current_exception();
					}
					next = n;
				}
			}
		};
		{
			std::vector<std::jthread> pool;
			for (std::size_t t = 0; t < threads; ++t) {
				pool.emplace_back(work);
			}
		}
		if (failure) {
			std::rethrow_exception(failure);
		}
	}
	std::vector<T> out;
	out.reserve(n);
	for (auto &s : slots) {
		out.push_back(std::move(*s));
	}
	return out;
}

} // namespace hilbfock

#endif
