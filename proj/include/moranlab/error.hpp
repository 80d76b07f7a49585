#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace moranlab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Enumeration or sample budget exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed spec file, bad arguments or other user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of words any single enumeration may visit.
/// Defaults to 2^24; the MORANLAB_ENUM_CAP environment variable overrides it.
std::uint64_t enumeration_cap();

/// Throws ResourceError when `count` exceeds enumeration_cap().
void require_enumerable(double count, const std::string& what);

}  // namespace moranlab
