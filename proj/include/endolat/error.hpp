#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace endolat {

enum class ErrorKind {
  kCycleDetected,
  kNoUniqueBound,
  kNotALattice,
  kTooLarge,
  kUnknownElement,
  kNotComparable,
  kPrecondition,
  kNoKernel,
  kNotConstantOnKernelCosets,
  kNotIntervalIso,
  kNotComplementPair,
  kDomainMismatch,
  kNotInvariant,
  kNotClosed,
  kNotModular,
  kShortcutMismatch,
  kIllDefined,
  kInternalInvariantViolation,
  kEquivalenceViolation,
  kOrderBound,
  kParse,
  kTheoremViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-status mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

}  // namespace endolat
