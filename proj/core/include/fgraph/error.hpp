#pragma once

#include <stdexcept>
#include <string>

namespace fgraph {

enum class ErrorKind {
  kCapExceeded,
  kMalformedInput,
  kInvalidParameter,
  kValidation,
  kNotNormal,
  kPrecondition,
  kCertificate,
};

const char* error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a kind so front ends can map
// it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fgraph
