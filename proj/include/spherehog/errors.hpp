#pragma once

#include <stdexcept>

namespace spherehog {

// Argument violates a documented precondition. The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs fall outside the working hypothesis (even parts differ, no dominant
// level set, no common translation, ...). The CLI maps this to exit code 3.
class hypothesis_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spherehog
