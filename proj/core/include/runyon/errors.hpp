#pragma once

#include <stdexcept>
#include <string>

namespace runyon {

/// Base of every exception thrown by the library. `code()` is a stable
/// identifier that the CLI and reports print verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define RUNYON_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

// exactalg
RUNYON_DEFINE_ERROR(DivisionNotExact);
RUNYON_DEFINE_ERROR(DenominatorVanishes);
RUNYON_DEFINE_ERROR(BasisOverflow);
RUNYON_DEFINE_ERROR(ParseError);

// series
RUNYON_DEFINE_ERROR(VariableMismatch);
RUNYON_DEFINE_ERROR(NotInvertibleConstantTerm);
RUNYON_DEFINE_ERROR(BadRootHint);
RUNYON_DEFINE_ERROR(NonzeroInnerConstant);
RUNYON_DEFINE_ERROR(ValuationMismatch);
RUNYON_DEFINE_ERROR(PoleAtOrigin);

// formulas
RUNYON_DEFINE_ERROR(IndexOutOfRange);

#undef RUNYON_DEFINE_ERROR

}  // namespace runyon
