#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace riordan {

// Base of all domain errors. name() is the stable identifier the CLI prints
// and scripts match on; what() carries the details.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RIORDAN_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}  \
    }

RIORDAN_DEFINE_ERROR(ZeroConstantTerm);
RIORDAN_DEFINE_ERROR(CompositionOrderError);
RIORDAN_DEFINE_ERROR(NotInvertibleForComposition);
RIORDAN_DEFINE_ERROR(DegreeAboveTruncation);
RIORDAN_DEFINE_ERROR(TruncationTooShort);
RIORDAN_DEFINE_ERROR(RootOfUnityMultiplier);
RIORDAN_DEFINE_ERROR(UnsupportedNegativeUnit);
RIORDAN_DEFINE_ERROR(UnitMultiplierError);
RIORDAN_DEFINE_ERROR(ZeroLambda);
RIORDAN_DEFINE_ERROR(NotInG2);
RIORDAN_DEFINE_ERROR(NotInGk);
RIORDAN_DEFINE_ERROR(NotInDerivedR);
RIORDAN_DEFINE_ERROR(NotRiordanShape);
RIORDAN_DEFINE_ERROR(InvalidDocument);
RIORDAN_DEFINE_ERROR(VerificationFailed);

#undef RIORDAN_DEFINE_ERROR

}  // namespace riordan
