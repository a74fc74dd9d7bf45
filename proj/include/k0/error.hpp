#pragma once

#include <stdexcept>

namespace k0 {

/// Malformed or inconsistent input: unknown labels, bad annotations,
/// unparsable files. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace k0
