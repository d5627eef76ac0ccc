#pragma once

#include <stdexcept>
#include <string>

namespace permav {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfRange = 2,
  UnknownCase = 3,
  Domain = 4,
  NonIntegral = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace permav
