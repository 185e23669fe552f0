#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace halfshift::cli {

// Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 cell cap.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace halfshift::cli
