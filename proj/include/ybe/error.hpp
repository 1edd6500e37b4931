#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

enum class ErrorKind {
  NotBijective,
  BadLabel,
  BudgetExceeded,
  NotBraided,
  NotAUnit,
  BlocksNotInvariant,
  DegreeBudgetExceeded,
  InvalidArgument,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace ybe
