#pragma once

#include <stdexcept>
#include <string>

namespace plh {

/// Raised for contract violations of the map calculus (class mismatches,
/// invalid breakpoint data, failed preconditions). The message is the
/// user-facing diagnostic.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace plh
