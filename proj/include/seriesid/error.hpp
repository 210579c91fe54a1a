#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seriesid {

enum class ErrorKind {
  DuplicateFactor,
  DegreeTooHigh,
  InvalidFactor,
  DivergentSeries,
  CapExceeded,
  PreconditionViolated,
  PrecisionOverflow,
  UnsupportedConstantBasis,
  GammaUnsupported,
  UnknownName,
  NoConvergence,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as a SeriesError
/// carrying a machine-checkable kind.
class SeriesError : public std::runtime_error {
 public:
  SeriesError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parser failures also record the byte offset in the input.
class ParseError : public SeriesError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : SeriesError(ErrorKind::ParseError,
                    what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace seriesid
