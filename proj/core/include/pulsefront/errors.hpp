#pragma once

#include <stdexcept>
#include <string>

namespace pulsefront {

// Base of all library errors. `contract()` is the stable short name that the
// CLI prints as its one-line diagnostic; `what()` carries the details.
class Error : public std::runtime_error {
public:
  Error(std::string contract, const std::string& message)
      : std::runtime_error(contract + ": " + message),
        contract_(std::move(contract)) {}

  const std::string& contract() const noexcept { return contract_; }

private:
  std::string contract_;
};

// Bad inputs or violated preconditions (CLI exit code 2).
class ValidationError : public Error {
  using Error::Error;
};

// A numerical procedure failed to produce a trustworthy result (exit code 3).
class NumericalError : public Error {
  using Error::Error;
};

#define PULSEFRONT_DEFINE_ERROR(Name, Base)                \
  class Name : public Base {                               \
  public:                                                  \
    explicit Name(const std::string& message)              \
        : Base(#Name, message) {}                          \
  }

PULSEFRONT_DEFINE_ERROR(NonPositiveProfile, ValidationError);
PULSEFRONT_DEFINE_ERROR(InvalidPatchGeometry, ValidationError);
PULSEFRONT_DEFINE_ERROR(InvalidProfile, ValidationError);
PULSEFRONT_DEFINE_ERROR(InvalidRequest, ValidationError);
PULSEFRONT_DEFINE_ERROR(NonPositiveMeanGrowth, ValidationError);
PULSEFRONT_DEFINE_ERROR(NotMeanZero, ValidationError);
PULSEFRONT_DEFINE_ERROR(IdenticallyZeroGrowth, ValidationError);
PULSEFRONT_DEFINE_ERROR(DomainError, ValidationError);
PULSEFRONT_DEFINE_ERROR(InsufficientTrace, ValidationError);
PULSEFRONT_DEFINE_ERROR(MissingColumn, ValidationError);
PULSEFRONT_DEFINE_ERROR(BadConfig, ValidationError);

PULSEFRONT_DEFINE_ERROR(PerronFailure, NumericalError);
PULSEFRONT_DEFINE_ERROR(NonConvergence, NumericalError);
PULSEFRONT_DEFINE_ERROR(BracketFailure, NumericalError);
PULSEFRONT_DEFINE_ERROR(NoRootAboveM, NumericalError);
PULSEFRONT_DEFINE_ERROR(BlowUp, NumericalError);
PULSEFRONT_DEFINE_ERROR(FrontExited, NumericalError);

#undef PULSEFRONT_DEFINE_ERROR

}  // namespace pulsefront
