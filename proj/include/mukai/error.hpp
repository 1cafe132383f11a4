#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
  Usage = 1,       // bad invocation / unparsable input
  Validation = 2,  // structural constraint violated (ranks, Euler sum, ...)
  Math = 3,        // mathematical precondition failed (div by zero, bad period, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string& msg) { return Error(ErrorKind::Usage, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrorKind::Validation, msg); }
inline Error math_error(const std::string& msg) { return Error(ErrorKind::Math, msg); }

}  // namespace mukai
