#pragma once

#include <stdexcept>
#include <string>

namespace rectsym {

// Base for every error raised by the library. Vanishing coefficients are
// never errors; these signal malformed input or an internal inconsistency.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RECTSYM_DEFINE_ERROR(Name)                          \
    class Name : public Error {                             \
    public:                                                 \
        explicit Name(const std::string& what)              \
            : Error(std::string(#Name ": ") + what) {}      \
    };

RECTSYM_DEFINE_ERROR(InvalidPartition)
RECTSYM_DEFINE_ERROR(LengthExceedsBox)
RECTSYM_DEFINE_ERROR(LengthMismatch)
RECTSYM_DEFINE_ERROR(ArityMismatch)
RECTSYM_DEFINE_ERROR(InexactDivision)
RECTSYM_DEFINE_ERROR(ZeroPolynomial)
RECTSYM_DEFINE_ERROR(NotSymmetric)
RECTSYM_DEFINE_ERROR(WeightMismatch)
RECTSYM_DEFINE_ERROR(NonIntegralResult)
RECTSYM_DEFINE_ERROR(ArityTooSmall)
RECTSYM_DEFINE_ERROR(PreconditionViolated)
RECTSYM_DEFINE_ERROR(ParseError)

#undef RECTSYM_DEFINE_ERROR

}  // namespace rectsym
