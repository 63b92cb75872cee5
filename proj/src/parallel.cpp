#include "hilbfock/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace hilbfock
{

unsigned worker_count()
{
	if (const char *env = std::getenv("HILBFOCK_THREADS")) {
		unsigned value = 0;
		const char *end = env + std::strlen(env);
		const auto [ptr, ec] = std::from_chars(env, end, value);
		if (ec == std::errc() && ptr == end && value > 0) {
			return value;
		}
	}
	return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace hilbfock
