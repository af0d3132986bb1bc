#pragma once

#include <stdexcept>
#include <string>

namespace kpferm {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  CapExceeded,
  SelfCheckMismatch,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, what);
}

[[noreturn]] inline void throw_internal(const std::string& what) {
  throw Error(ErrorKind::Internal, what);
}

}  // namespace kpferm
