#pragma once

#include <stdexcept>
#include <string>

namespace agree {

// Raised on violated preconditions and malformed inputs throughout the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace agree
