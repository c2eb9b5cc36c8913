#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace superweyl {

/// Base class for all recoverable domain errors. Every concrete error carries
/// a stable name (used verbatim by the CLI and the machine format) plus an
/// optional human-readable detail string.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SUPERWEYL_DEFINE_ERROR(NAME)                                   \
    class NAME : public DomainError {                                  \
    public:                                                            \
        explicit NAME(const std::string& detail = "")                  \
            : DomainError(#NAME, detail) {}                            \
    }

SUPERWEYL_DEFINE_ERROR(InvalidInput);
SUPERWEYL_DEFINE_ERROR(RankMismatch);
SUPERWEYL_DEFINE_ERROR(DivisionByZero);
SUPERWEYL_DEFINE_ERROR(NotDivisible);
SUPERWEYL_DEFINE_ERROR(SizeOutOfRange);
SUPERWEYL_DEFINE_ERROR(GammaVanishesOnRoot);
SUPERWEYL_DEFINE_ERROR(InvalidCharacteristic);
SUPERWEYL_DEFINE_ERROR(GroupTooLarge);
SUPERWEYL_DEFINE_ERROR(NotDominant);
SUPERWEYL_DEFINE_ERROR(NoParabolic);
SUPERWEYL_DEFINE_ERROR(RhoOddNotInvariant);
SUPERWEYL_DEFINE_ERROR(LambdaNotInSupport);
SUPERWEYL_DEFINE_ERROR(NotPartition);
SUPERWEYL_DEFINE_ERROR(SquareRootUnavailable);
SUPERWEYL_DEFINE_ERROR(InstanceTooLarge);

#undef SUPERWEYL_DEFINE_ERROR

}  // namespace superweyl
