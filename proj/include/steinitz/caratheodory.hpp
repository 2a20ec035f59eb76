#pragma once

#include <cstddef>
#include <vector>

#include "steinitz/polarity.hpp"

namespace steinitz {

/// Outcome of the Phase-1 feasibility solve for target ∈ conv(cloud).
struct HullMembership {
    bool feasible = false;
    /// Convex weights over the cloud (feasible case).
    Vector weights;
    /// Unit u with <u, target> > max_i <u, q_i> (infeasible case).
    Vector witness;
    /// Optimal Phase-1 objective: total artificial mass left.
    double infeasibility = 0.0;
};

/**
 * Phase-1 simplex on {sum λ_i q_i = target, sum λ_i = 1, λ >= 0} with
 * Bland's rule. Never throws on infeasibility; the separating direction is
 * read off the final Phase-1 duals.
 */
HullMembership initial_convex_combination(const PointCloud& cloud, const Vector& target,
                                          const Tolerance& tol);

struct CaratheodoryResult {
    /// Non-anchor support, ascending indices into the cloud; at most d.
    std::vector<std::size_t> indices;
    /// Weight of each entry of `indices`.
    std::vector<double> coefficients;
    double anchor_coefficient = 0.0;
    /// |anchor_coefficient·b + sum coefficients·q - target|.
    double residual = 0.0;
    /// Largest movement of the represented point over all reduction steps.
    double max_step_drift = 0.0;
    int reduction_steps = 0;
};

/**
 * Writes target as a convex combination of the anchor and at most d cloud
 * points. Starts from a Phase-1 representation with zero anchor weight and
 * repeatedly cancels a support point along an affine dependence of
 * {q_i - anchor}, never decreasing the anchor weight.
 *
 * Throws TargetNotInHull when target ∉ conv(cloud).
 */
CaratheodoryResult anchored_caratheodory(const PointCloud& cloud, const Vector& target,
                                         const Vector& anchor, const Tolerance& tol);

}  // namespace steinitz
