#ifndef HILBFOCK_CLI_HPP
#define HILBFOCK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hilbfock
{

enum ExitStatus
{
	exit_ok = 0,
	exit_verification_failed = 1,
	exit_usage = 2,
	exit_resource_limit = 3,
};

// Largest sizes accepted before a command refuses with exit_resource_limit.
inline constexpr int table_degree_limit = 40;
inline constexpr int verify_order_limit = 16;
inline constexpr int default_level_bound = 10;

/// Runs the hilbfock command line on args (without the program name).
/// Returns the process exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hilbfock

#endif
