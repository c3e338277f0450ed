// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace swapnet {

// All failures carry a short machine-readable kind (NotHermitian, NotPSD,
// ParamOutOfRange, ...) plus a human-readable context string. The CLI maps
// any Error to exit code 2 and prints kind + context.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& context)
      : std::runtime_error(kind + ": " + context), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace swapnet
