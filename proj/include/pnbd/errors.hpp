#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnbd {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A hard structural limit was exceeded; never silently truncated.
struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// An invariant of a value failed; message names the offending element.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Precondition or shape mismatch between otherwise valid values.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Enumeration exceeded its budget; carries the partial count.
struct EnumerationError : Error {
  EnumerationError(const std::string& what, std::size_t partial)
      : Error(what), partial_count(partial) {}
  std::size_t partial_count;
};

// Instance file could not be parsed; message carries a JSON path.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace pnbd
