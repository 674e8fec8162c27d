#pragma once

#include <stdexcept>

namespace emc {

// An operation would exceed one of the documented desk-scale caps
// (ground set > 64, candidate universe > 2^20, partition ground set > 14).
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emc
