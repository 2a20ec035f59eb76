#include "steinitz/errors.hpp"

namespace steinitz {

std::string_view reason_tag(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "invalid_argument";
        case Errc::SingularSystem: return "singular_system";
        case Errc::Unbounded: return "unbounded";
        case Errc::DimensionTooLarge: return "dimension_too_large";
        case Errc::CenterNotInterior: return "center_not_interior";
        case Errc::InfeasiblePoint: return "infeasible_point";
        case Errc::UnboundedPolytope: return "unbounded_polytope";
        case Errc::DegenerateCloud: return "degenerate_cloud";
        case Errc::InclusionViolated: return "inclusion_violated";
        case Errc::TargetNotInHull: return "target_not_in_hull";
        case Errc::BallNotContained: return "ball_not_contained";
        case Errc::TooFewPoints: return "too_few_points";
        case Errc::BudgetExceeded: return "budget_exceeded";
        case Errc::RetryExhausted: return "retry_exhausted";
        case Errc::VerificationFailed: return "verification_failed";
    }
    return "unknown";
}

}  // namespace steinitz
