#pragma once

#include <stdexcept>
#include <string>

namespace dqc1 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WidthMismatchError : Error {
  using Error::Error;
};

struct QubitRangeError : Error {
  using Error::Error;
};

struct NonCliffordError : Error {
  using Error::Error;
};

struct TermBlowupError : Error {
  using Error::Error;
};

struct NonCnotGateError : Error {
  using Error::Error;
};

struct CtrlDepthError : Error {
  using Error::Error;
};

struct DenseCapError : Error {
  using Error::Error;
};

}  // namespace dqc1
