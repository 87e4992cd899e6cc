#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubemax {

enum class ErrorKind {
  ZeroRow,
  DimensionMismatch,
  DimensionTooLarge,
  SizeGuard,
  UnknownEntry,
  DegenerateSample,
  DomainError,
  ParseError,
  NonFinite,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// callers (the CLI in particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubemax
