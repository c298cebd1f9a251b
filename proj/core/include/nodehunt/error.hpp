#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodehunt {

enum class Errc {
  NonPrime,
  InvalidDegree,
  DivisionByZero,
  ContextMismatch,
  SyntaxError,
  UnknownVariable,
  IndexOutOfRange,
  NotSquare,
  DimensionMismatch,
  BudgetExceeded,
  NotLinearInParams,
  NotSingular,
  InsufficientPoints,
  NotOnVariety,
  DuplicatePrime,
  NoReconstruction,
  HeldOutMismatch,
  NoSolution,
  NotAGenerator,
  NonIntegral,
  InconsistentData,
  NegativeH0,
  UnknownName,
  Usage,
};

std::string_view errc_name(Errc e) noexcept;

/// Single exception type for the library; `code()` selects the error class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  /// what() without the error-class prefix.
  std::string_view message() const noexcept {
    return std::string_view(what()).substr(errc_name(code_).size() + 2);
  }

 private:
  Errc code_;
};

}  // namespace nodehunt
