#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqg {

enum class ErrorKind {
  NotPrime,
  NotCoprime,
  InvalidTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  BadPresentation,
  CapExceeded,
  MixedContext,
  NotCyclicQuotient,
  NotMetabelian,
  NotSemisimple,
  EvenQ,
  InternalInconsistency,
  AssertionFailure,
  ResourceLimit,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// to an exit status.  The message names witnesses where there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fqg
