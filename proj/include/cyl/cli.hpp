#pragma once

#include <string>
#include <vector>

namespace cyl {

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 error, 2 inconclusive
    std::string out;
    std::string err;
};

// Parses and executes one invocation (arguments without the program name).
// Never prints and never exits, so tests can drive it in-process.
CommandResult run(const std::vector<std::string>& args);

// main() wrapper: executes, prints the captured streams, returns the code.
int run_main(int argc, char** argv);

}  // namespace cyl
