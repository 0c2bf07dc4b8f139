#pragma once

#include <stdexcept>
#include <string>

namespace partcong {

/// Raised when a modular inverse is requested for a non-unit.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A partition table (or its configured ceiling) does not reach an argument.
class TableShortfall : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A truncated series does not carry enough coefficients for a request.
class PrecisionShortfall : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A request exceeds a configured resource cap.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace partcong
