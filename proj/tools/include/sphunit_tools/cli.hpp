// cli.hpp
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphunit::cli {

// args excludes the program name. Returns the exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sphunit::cli
