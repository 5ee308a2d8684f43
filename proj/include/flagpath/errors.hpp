#pragma once

#include <stdexcept>
#include <string>

namespace flagpath {

// Base class for all domain errors. CLI maps these to exit code 1;
// malformed arguments are reported as usage errors (exit code 2) instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FLAGPATH_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

FLAGPATH_DEFINE_ERROR(DimensionMismatch);
FLAGPATH_DEFINE_ERROR(WrongStepMultiset);
FLAGPATH_DEFINE_ERROR(IllegalSwitch);
FLAGPATH_DEFINE_ERROR(InfeasiblePrefix);
FLAGPATH_DEFINE_ERROR(NotAPartition);
FLAGPATH_DEFINE_ERROR(EmptyPath);
FLAGPATH_DEFINE_ERROR(OutOfRange);
FLAGPATH_DEFINE_ERROR(GroundTooLarge);
FLAGPATH_DEFINE_ERROR(GroundMismatch);
FLAGPATH_DEFINE_ERROR(BadRank);
FLAGPATH_DEFINE_ERROR(EmptyFamily);
FLAGPATH_DEFINE_ERROR(IllegalMove);
FLAGPATH_DEFINE_ERROR(WrongCardinality);
FLAGPATH_DEFINE_ERROR(NotAFlagBasis);

#undef FLAGPATH_DEFINE_ERROR

}  // namespace flagpath
