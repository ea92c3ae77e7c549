#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QUINTIC_ERROR(Name)                                                  \
    struct Name : Error {                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// core_arith
QUINTIC_ERROR(CompositeResidual);
QUINTIC_ERROR(NoRealRoot);

// padic
QUINTIC_ERROR(DivisionByZero);
QUINTIC_ERROR(PrecisionExhausted);
QUINTIC_ERROR(IncompatibleRamification);
QUINTIC_ERROR(UnsupportedRamified);

// series
QUINTIC_ERROR(NonUnitLeadingTerm);
QUINTIC_ERROR(RamifiedExponent);
QUINTIC_ERROR(TailUnbounded);
QUINTIC_ERROR(NoConvergence);

// expansions
QUINTIC_ERROR(UnsupportedPrime);
QUINTIC_ERROR(NotASquare);

// zero_bounds
QUINTIC_ERROR(ZeroReduction);
QUINTIC_ERROR(UnknownTableEntry);

// curve_points / case_filter
QUINTIC_ERROR(BadReduction);
QUINTIC_ERROR(IncompleteCover);

// cli
QUINTIC_ERROR(FixtureViolation);

#undef QUINTIC_ERROR

}  // namespace quintic
