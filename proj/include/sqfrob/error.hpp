#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqfrob {

enum class ErrorKind {
  EmptyGenerators,
  NonCoprime,
  ZeroGenerator,
  NegativeInput,
  NotAGenerator,
  FullSemigroup,
  DTooSmall,
  BadResidue,
  EvenInput,
  InvalidArgument,
  Overflow,
  BadGoldenData,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sqfrob
