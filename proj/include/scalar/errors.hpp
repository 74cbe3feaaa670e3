#pragma once

#include <stdexcept>
#include <string>

namespace scalar {

/// Base class of every library error. `code()` is a stable identifier used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define SCALAR_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what = "") : Error(#Name, what) {} \
    };

SCALAR_DEFINE_ERROR(DimensionMismatch)
SCALAR_DEFINE_ERROR(EmptyInput)
SCALAR_DEFINE_ERROR(AsymmetricBall)
SCALAR_DEFINE_ERROR(DegenerateBall)
SCALAR_DEFINE_ERROR(AnchorTooShort)
SCALAR_DEFINE_ERROR(RNotInterior)
SCALAR_DEFINE_ERROR(UnboundedInterval)
SCALAR_DEFINE_ERROR(NotAGenerator)
SCALAR_DEFINE_ERROR(NotSolid)
SCALAR_DEFINE_ERROR(NotPointed)
SCALAR_DEFINE_ERROR(PairInvalid)
SCALAR_DEFINE_ERROR(Unbounded)

#undef SCALAR_DEFINE_ERROR

/// Raised by the pair constructors; `detail()` names the failing inequality.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& inequality)
        : Error("PreconditionViolated", inequality), detail_(inequality) {}
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
};

/// Raised when a constructed object fails its own verification; `stage()` names the step.
class ConstructionFailed : public Error {
public:
    explicit ConstructionFailed(const std::string& stage)
        : Error("ConstructionFailed", stage), stage_(stage) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace scalar
