#pragma once

#include <stdexcept>
#include <string>

namespace symknot {

enum class ErrorKind {
  kSyntax,
  kLabelConsistency,
  kInvalidArgument,
  kNonPlanar,
  kResourceLimit,
  kUnknownName,
  kFingerprintMismatch,
  kIo,
  kSchema,
  kMissingFixture,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symknot
