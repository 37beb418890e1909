#pragma once

#include <stdexcept>
#include <string>

namespace causet {

enum class ErrorKind {
  UnboundVariable,
  UnknownVariable,
  OutOfRange,
  DuplicateVariable,
  InvalidModel,
  SearchSpaceExceeded,
  Precondition,
  Structural,
  UnknownFixture,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace causet
