// SPDX-License-Identifier: Apache-2.0

#include "swapnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swapnet::cli::run(args);
}
