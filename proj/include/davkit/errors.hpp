// errors.hpp -- exception types shared across the library.
//
// Every precondition violation raises a dedicated type so callers (and
// tests) can discriminate failure modes without parsing messages.
#pragma once

#include <stdexcept>
#include <string>

namespace davkit {

#define DAVKIT_DEFINE_ERROR(Name)                          \
  struct Name : std::runtime_error {                       \
    explicit Name(const std::string& msg)                  \
        : std::runtime_error(std::string(#Name ": ") + msg) {} \
  }

// group construction / weight reduction
DAVKIT_DEFINE_ERROR(BadFactorError);
DAVKIT_DEFINE_ERROR(NonChainError);
DAVKIT_DEFINE_ERROR(EmptyWeightsError);
DAVKIT_DEFINE_ERROR(TrivialWeightsError);

// generic argument validation
DAVKIT_DEFINE_ERROR(BadArgsError);
DAVKIT_DEFINE_ERROR(TooLargeError);
DAVKIT_DEFINE_ERROR(FormatError);

// linear codes
DAVKIT_DEFINE_ERROR(NotPrimeError);
DAVKIT_DEFINE_ERROR(NotFullRankError);
DAVKIT_DEFINE_ERROR(NotGeneratingError);

// cap sets
DAVKIT_DEFINE_ERROR(DuplicatePointError);
DAVKIT_DEFINE_ERROR(EvenPError);
DAVKIT_DEFINE_ERROR(NotACapError);
DAVKIT_DEFINE_ERROR(HasShortSubsumError);

// bound ledger
DAVKIT_DEFINE_ERROR(BadSplitError);
DAVKIT_DEFINE_ERROR(NoFiniteEntryError);
DAVKIT_DEFINE_ERROR(NotMultClosedError);
DAVKIT_DEFINE_ERROR(ContradictionError);
DAVKIT_DEFINE_ERROR(RangeTooShortError);

// numerics
DAVKIT_DEFINE_ERROR(DomainError);
DAVKIT_DEFINE_ERROR(NoSolutionError);
DAVKIT_DEFINE_ERROR(RootNotBracketedError);

#undef DAVKIT_DEFINE_ERROR

}  // namespace davkit
