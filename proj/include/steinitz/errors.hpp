#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steinitz {

enum class Errc {
    InvalidArgument,
    SingularSystem,
    Unbounded,
    DimensionTooLarge,
    CenterNotInterior,
    InfeasiblePoint,
    UnboundedPolytope,
    DegenerateCloud,
    InclusionViolated,
    TargetNotInHull,
    BallNotContained,
    TooFewPoints,
    BudgetExceeded,
    RetryExhausted,
    VerificationFailed,
};

// Machine-readable tag, e.g. "singular_system".
std::string_view reason_tag(Errc code) noexcept;

class GeometryError : public std::runtime_error {
public:
    GeometryError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view reason() const noexcept { return reason_tag(code_); }

private:
    Errc code_;
};

}  // namespace steinitz
