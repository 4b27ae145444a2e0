#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagmet {

enum class ErrorKind {
  InvalidParams,
  ZeroPolynomial,
  NoVariable,
  InexactDivision,
  EndpointRoot,
  UncertifiedSign,
  DimensionMismatch,
  NonKahlerBranchSolution,
  UnexpectedPositiveRoot,
  TheoremMismatch,
  CertificateFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flagmet
