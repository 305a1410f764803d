#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a stated invariant fails at run time; maps to exit code 2.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Raised when the configured precision or bit budget is insufficient; maps to exit code 3.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

#define G2_ERROR(Name, Base)          \
    class Name : public Base {        \
    public:                           \
        using Base::Base;             \
    };

G2_ERROR(SingularCurve, Error)
G2_ERROR(NonConvergence, PrecisionExhausted)
G2_ERROR(DegenerateImage, InvariantViolation)
G2_ERROR(EqualX, Error)
G2_ERROR(InfinityOperand, Error)
G2_ERROR(InfinityPoint, Error)
G2_ERROR(TorsionOperand, Error)
G2_ERROR(PathDegeneracy, PrecisionExhausted)
G2_ERROR(ReductionStall, Error)
G2_ERROR(AmbiguousMatch, PrecisionExhausted)
G2_ERROR(EvenThetaVanishes, InvariantViolation)
G2_ERROR(OnDivisor, Error)
G2_ERROR(MissingAnalytic, Error)
G2_ERROR(DegenerateGram, Error)
G2_ERROR(DomainError, Error)
G2_ERROR(EmptyInterval, Error)

#undef G2_ERROR

}  // namespace g2
