#pragma once

#include <stdexcept>
#include <string>

namespace htarea {

// Base of everything the library throws on bad input. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HTAREA_ERROR(Name)                                \
    class Name : public Error {                           \
    public:                                               \
        explicit Name(const std::string& what)            \
            : Error(std::string(#Name ": ") + what) {}    \
    };

HTAREA_ERROR(DegenerateCrossRatio)
HTAREA_ERROR(DegenerateConfiguration)
HTAREA_ERROR(ParallelLines)
HTAREA_ERROR(InvalidPolygon)
HTAREA_ERROR(NotGeneralPosition)
HTAREA_ERROR(NotPositive)
HTAREA_ERROR(NoBoundedChart)
HTAREA_ERROR(PointOutsideDomain)
HTAREA_ERROR(ZeroVector)
HTAREA_ERROR(OriginNotInterior)
HTAREA_ERROR(DomainError)
HTAREA_ERROR(LengthMismatch)

#undef HTAREA_ERROR

// Thrown when adaptive refinement runs out of budget. Carries the best estimate.
class ToleranceNotReached : public Error {
public:
    ToleranceNotReached(const std::string& what, double value, double error_estimate)
        : Error("ToleranceNotReached: " + what), value_(value), error_(error_estimate) {}
    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_; }

private:
    double value_;
    double error_;
};

}  // namespace htarea
