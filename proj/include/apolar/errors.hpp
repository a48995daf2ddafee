#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Base class for all library errors. `code()` is a stable machine-readable
// tag used by the CLI and the JSON reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define APOLAR_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what)                     \
            : Error(#Name, std::string(#Name) + ": " + what) {}    \
    }

APOLAR_DEFINE_ERROR(UnknownVariable);
APOLAR_DEFINE_ERROR(SyntaxError);
APOLAR_DEFINE_ERROR(NonIntegerExponent);
APOLAR_DEFINE_ERROR(RingMismatch);
APOLAR_DEFINE_ERROR(InconsistentRing);
APOLAR_DEFINE_ERROR(NotArtinian);
APOLAR_DEFINE_ERROR(NotGenerating);
APOLAR_DEFINE_ERROR(ZeroPolynomial);
APOLAR_DEFINE_ERROR(Inhomogeneous);
APOLAR_DEFINE_ERROR(DegreeMismatch);
APOLAR_DEFINE_ERROR(DegreeTooSmall);
APOLAR_DEFINE_ERROR(NotGorenstein);
APOLAR_DEFINE_ERROR(NotBigraded);
APOLAR_DEFINE_ERROR(NotCubic);
APOLAR_DEFINE_ERROR(CharTooSmall);
APOLAR_DEFINE_ERROR(VariableLimitExceeded);
APOLAR_DEFINE_ERROR(PreconditionFailed);

#undef APOLAR_DEFINE_ERROR

}  // namespace apolar
