#pragma once

#include <stdexcept>
#include <string>

namespace diskcolor {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DISKCOLOR_DEFINE_ERROR(Name)                          \
    struct Name : Error {                                     \
        explicit Name(const std::string& what)                \
            : Error(std::string(#Name) + ": " + what) {}      \
    }

DISKCOLOR_DEFINE_ERROR(IdenticalCircles);
DISKCOLOR_DEFINE_ERROR(PointNotOnCircle);
DISKCOLOR_DEFINE_ERROR(PointOnBoundary);
DISKCOLOR_DEFINE_ERROR(NoRationalPointFound);
DISKCOLOR_DEFINE_ERROR(DegenerateArc);
DISKCOLOR_DEFINE_ERROR(PrecisionBudgetExceeded);
DISKCOLOR_DEFINE_ERROR(InvalidOrder);
DISKCOLOR_DEFINE_ERROR(NoFreeArc);
DISKCOLOR_DEFINE_ERROR(NoExposedPoint);
DISKCOLOR_DEFINE_ERROR(EdgeNotFound);
DISKCOLOR_DEFINE_ERROR(DegenerateInput);
DISKCOLOR_DEFINE_ERROR(DegeneratePosition);
DISKCOLOR_DEFINE_ERROR(OriginInPointSet);
DISKCOLOR_DEFINE_ERROR(NoColoringFound);
DISKCOLOR_DEFINE_ERROR(InvariantViolation);
DISKCOLOR_DEFINE_ERROR(InputError);

#undef DISKCOLOR_DEFINE_ERROR

} // namespace diskcolor
