/// @file cli.hpp
/// Entry point of the `treealg` command line tool.
#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace treealg {

/// Exit status: 0 success, 1 verification failure, 2 usage or parse error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

}  // namespace treealg
