#include "ybe/error.hpp"

namespace ybe {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotBraided: return "NotBraided";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::BlocksNotInvariant: return "BlocksNotInvariant";
    case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + what);
}

}  // namespace ybe
