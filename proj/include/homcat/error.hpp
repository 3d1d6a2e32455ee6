#pragma once

#include <stdexcept>
#include <string>

namespace homcat {

// Base for every error thrown by the library. `code()` is a stable
// machine-readable tag; `what()` carries the human-readable detail,
// always naming the offending entity.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define HOMCAT_ERROR(NAME)                                        \
    class NAME : public Error {                                   \
    public:                                                       \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

HOMCAT_ERROR(AssocViolation);
HOMCAT_ERROR(IdentityViolation);
HOMCAT_ERROR(TypeMismatch);
HOMCAT_ERROR(UnknownObject);
HOMCAT_ERROR(NotAComplex);
HOMCAT_ERROR(NotAField);
HOMCAT_ERROR(NotBounded);
HOMCAT_ERROR(SubspaceViolation);
HOMCAT_ERROR(ConventionMismatch);
HOMCAT_ERROR(ModuleAxiomFailure);
HOMCAT_ERROR(TooLarge);
HOMCAT_ERROR(CapExceeded);
HOMCAT_ERROR(ParseError);
HOMCAT_ERROR(RingMismatch);

#undef HOMCAT_ERROR

} // namespace homcat
