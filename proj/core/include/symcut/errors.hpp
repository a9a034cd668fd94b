#ifndef SYMCUT_ERRORS_HPP
#define SYMCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symcut {

enum class ErrorKind {
  NonReducedType,
  RankOutOfRange,
  SingularGram,
  NonTerminating,
  ReductionMismatch,
  RankCapExceeded,
  UnknownCase,
  NonPositiveRicci,
  NoForms,
  BadInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symcut

#endif  // SYMCUT_ERRORS_HPP
