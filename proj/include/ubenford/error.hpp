#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ubenford {

enum class ErrorKind {
  DomainError,
  InvalidParameter,
  InsufficientPrecision,
  PrecisionCapExceeded,
  EmptySample,
  NotUnimodal,
  HypothesisViolated,
  TruncationFailure,
  CertificateViolation,
  FileError,
  NoNumericColumn,
  EmptyDataset,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Input errors are the caller's fault (bad file, bad parameter, value
/// outside a transform's domain); everything else is a numerical failure.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ubenford
