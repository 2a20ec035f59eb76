#pragma once

#include <optional>
#include <vector>

#include "steinitz/polarity.hpp"

namespace steinitz {

/// Unit-halfspace system with one positive weight per normal.
struct WeightedSystem {
    UnitHalfspaceSystem system;
    std::vector<double> weights;

    /// All weights equal to one.
    static WeightedSystem uniform(UnitHalfspaceSystem h);

    void validate() const;
};

struct CenterResult {
    Vector center;
    double residual = 0.0;  ///< |sum_i beta_i v_i / (1 - <c, v_i>)|
    int iterations = 0;
    bool converged = false;
    double log_objective = 0.0;
    /// Log-objective at the start point and after every accepted step.
    std::vector<double> objective_trace;
};

struct CenterOptions {
    int max_iter = 200;
    /// Start point; the origin when empty. Must be strictly feasible.
    std::optional<Vector> start;
    /// Skip the interiority check on the normals (callers that already
    /// certified boundedness).
    bool assume_bounded = false;
};

/// sum_i beta_i ln(1 - <x, v_i>). Throws InfeasiblePoint when a slack is <= 0.
double log_objective(const WeightedSystem& w, const Vector& x);

/// -sum_i beta_i v_i / (1 - <x, v_i>), the gradient of log_objective.
Vector gradient(const WeightedSystem& w, const Vector& x);

/// sum_i beta_i v_i v_i^T / (1 - <x, v_i>)^2, the negated Hessian.
Matrix neg_hessian(const WeightedSystem& w, const Vector& x);

/**
 * Maximizes the weighted log-barrier sum_i beta_i ln(1 - <x, v_i>) by damped
 * Newton. Steps are cut back to 0.99 of the distance to the boundary and
 * then halved until the Armijo condition (constant 0.01) holds. The loop
 * stops when the gradient residual drops below
 * grad_eps * (1 + sum_i beta_i |v_i|).
 *
 * At the maximizer c the weighted images v_i / (1 - <c, v_i>) sum to zero.
 *
 * Throws UnboundedPolytope when the origin is not interior to conv(normals).
 * On iteration exhaustion returns the best iterate with converged = false.
 */
CenterResult solve_center(const WeightedSystem& w, const Tolerance& tol,
                          const CenterOptions& opts = {});

/// |sum_i beta_i vertex_correspondence(v_i, c)|.
double verify_zero_sum(const WeightedSystem& w, const Vector& c, const Tolerance& tol = {});

}  // namespace steinitz
