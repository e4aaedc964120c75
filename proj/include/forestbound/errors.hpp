#pragma once

#include <stdexcept>
#include <string>

namespace forestbound {

// Malformed or out-of-contract arguments (bad vertex index, loop where none
// is allowed, unparseable file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request, e.g. a constant outside its range of d.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A hard size guard tripped. Results are exact or absent, never truncated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Randomized construction gave up.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace forestbound
