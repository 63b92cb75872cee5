#include <iostream>
#include <string>
#include <vector>

#include "hilbfock/cli.hpp"

int main(int argc, char **argv)
{
	const std::vector<std::string> args(argv + 1, argv + argc);
	return hilbfock::run_cli(args, std::cout, std::cerr);
}
