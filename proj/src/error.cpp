#include "symknot/error.hpp"

namespace symknot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "syntax";
    case ErrorKind::kLabelConsistency: return "label-consistency";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kNonPlanar: return "non-planar";
    case ErrorKind::kResourceLimit: return "resource-limit";
    case ErrorKind::kUnknownName: return "unknown-name";
    case ErrorKind::kFingerprintMismatch: return "fingerprint-mismatch";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kMissingFixture: return "missing-fixture";
  }
  return "unknown";
}

}  // namespace symknot
