// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace swapnet::cli {

// Runs one subcommand. args excludes the program name. Exit codes:
// 0 success, 1 usage error, 2 numeric/generation/IO failure.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace swapnet::cli
