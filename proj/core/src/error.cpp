#include "fgraph/error.hpp"

namespace fgraph {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCapExceeded:
      return "cap-exceeded";
    case ErrorKind::kMalformedInput:
      return "malformed-input";
    case ErrorKind::kInvalidParameter:
      return "invalid-parameter";
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kNotNormal:
      return "not-normal";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kCertificate:
      return "certificate-failure";
  }
  return "unknown";
}

}  // namespace fgraph
