#pragma once

#include <stdexcept>
#include <string>

namespace pmcut {

// Base for all library errors; subcommands map these to nonzero exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PMCUT_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                         \
        explicit Name(const std::string& what) : Error(what) {}   \
    }

// instance construction
PMCUT_DEFINE_ERROR(EmbeddingInvalid);
PMCUT_DEFINE_ERROR(DuplicateId);
PMCUT_DEFINE_ERROR(NegativeCost);
PMCUT_DEFINE_ERROR(TerminalFiniteCost);
PMCUT_DEFINE_ERROR(InvalidInstance);

// graph operations
PMCUT_DEFINE_ERROR(NotConnected);
PMCUT_DEFINE_ERROR(InfiniteVolume);

// lp
PMCUT_DEFINE_ERROR(Infeasible);
PMCUT_DEFINE_ERROR(IterationLimit);

// decomposition pipeline
PMCUT_DEFINE_ERROR(PreconditionLongVertex);
PMCUT_DEFINE_ERROR(NotWeaklyConnected);
PMCUT_DEFINE_ERROR(NotShortestPath);
PMCUT_DEFINE_ERROR(PathTooLong);
PMCUT_DEFINE_ERROR(NoBalancedCycle);
PMCUT_DEFINE_ERROR(FeasibilityCheckFailed);

// verification / generation
PMCUT_DEFINE_ERROR(TooLarge);
PMCUT_DEFINE_ERROR(InvalidSpec);

#undef PMCUT_DEFINE_ERROR

} // namespace pmcut
