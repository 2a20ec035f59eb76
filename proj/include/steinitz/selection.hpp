#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/caratheodory.hpp"
#include "steinitz/polar_center.hpp"
#include "steinitz/simplex_search.hpp"

namespace steinitz {

struct PrunedCloud {
    PointCloud cloud;
    /// original_index[i] is the index in the input of cloud.points[i].
    std::vector<std::size_t> original_index;
};

/// Drops duplicates and every point lying in the hull of the remaining ones
/// (tested one at a time against the current survivors).
PrunedCloud prune_to_extreme(const PointCloud& q, const Tolerance& tol);

/// One numerical verification made while running a pipeline.
struct CheckRecord {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool upper = true;  ///< passes when value <= bound, otherwise when value >= bound
    bool passed = false;
};

struct SelectionCertificate {
    int dim = 0;
    std::vector<std::size_t> selected_indices;  ///< into the caller's cloud, ascending
    double certified_radius = 0.0;
    double guaranteed_radius = 0.0;  ///< 1 / (2(m + d) + 1) at the caller's scale
    std::size_t input_count = 0;
    std::size_t pruned_count = 0;  ///< m in the guaranteed radius
    std::vector<std::size_t> simplex_indices;
    std::vector<std::size_t> caratheodory_indices;
    Vector center;
    int center_iterations = 0;
    int simplex_restarts = 0;
    std::vector<CheckRecord> lemma_checks;
    /// Corollary pipelines only: the bound they promise.
    std::optional<double> corollary_bound;

    bool all_checks_passed() const;
    std::vector<std::string> failed_checks() const;
};

struct SelectionOptions {
    int restarts = 3;
    /// Restart budget is doubled this many times after an inclusion failure.
    int max_escalations = 4;
    int center_max_iter = 200;
    std::size_t subset_budget = kDefaultSubsetBudget;
    int jobs = 1;
};

/**
 * Selects at most 2d points of Q whose hull contains the ball of radius
 * 1 / (2(m + d) + 1), m being the number of extreme points of Q. Requires
 * conv(Q) ⊇ B.
 *
 * Pipeline: prune; center the polar at the maximizer of the log-barrier;
 * map the points through the vertex correspondence; take a locally maximal
 * simplex at the origin; reduce the centroid of the remaining images with
 * the simplex barycenter as anchor; certify the result with the inscribed
 * radius oracle. Every intermediate claim is recorded in lemma_checks.
 *
 * Throws BallNotContained, TooFewPoints, or InclusionViolated (after the
 * restart budget is exhausted).
 */
SelectionCertificate select_steinitz(const PointCloud& q, const Tolerance& tol,
                                     std::uint64_t seed = 0, const SelectionOptions& opts = {});

/// Q with at most alpha·d points and conv(Q) ⊇ lambda·B: at most 2d points
/// whose hull contains lambda / (5 alpha d)·B.
SelectionCertificate select_corollary12(const PointCloud& q, double alpha, double lambda,
                                        const Tolerance& tol, std::uint64_t seed = 0,
                                        const SelectionOptions& opts = {});

/// conv(Q) ⊇ B: reduce to at most 2d^2 points covering the cross-polytope,
/// then select; the result contains d^(-5/2) / 7·B.
SelectionCertificate select_corollary14(const PointCloud& q, const Tolerance& tol,
                                        std::uint64_t seed = 0, const SelectionOptions& opts = {});

/// 1 / (2(m + d) + 1).
double guaranteed_radius(std::size_t m, int d);

}  // namespace steinitz
