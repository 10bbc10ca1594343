#include "ubenford/error.hpp"

namespace ubenford {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::NotUnimodal: return "NotUnimodal";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TruncationFailure: return "TruncationFailure";
    case ErrorKind::CertificateViolation: return "CertificateViolation";
    case ErrorKind::FileError: return "FileError";
    case ErrorKind::NoNumericColumn: return "NoNumericColumn";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError:
    case ErrorKind::InvalidParameter:
    case ErrorKind::EmptySample:
    case ErrorKind::FileError:
    case ErrorKind::NoNumericColumn:
    case ErrorKind::EmptyDataset:
    case ErrorKind::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace ubenford
