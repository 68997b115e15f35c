#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreathlab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid input to an operation (precondition violation).
struct DomainError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input. `position` is a byte offset into the
/// offending string where known, std::string::npos otherwise.
struct ParseError : Error {
  std::size_t position;

  explicit ParseError(const std::string& what, std::size_t pos = std::string::npos)
      : Error(what), position(pos) {}
};

/// An explicit-group computation would touch more elements than allowed.
/// `required` is the decimal size the computation would have needed.
struct SizeLimitError : Error {
  std::string required;
  std::uint64_t limit;

  SizeLimitError(const std::string& what, std::string required_size, std::uint64_t lim)
      : Error(what), required(std::move(required_size)), limit(lim) {}
};

/// A stabilization threshold does not exist for the given inputs.
struct ThresholdError : Error {
  using Error::Error;
};

}  // namespace wreathlab
