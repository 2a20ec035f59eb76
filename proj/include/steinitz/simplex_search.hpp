#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "steinitz/polarity.hpp"

namespace steinitz {

struct SimplexResult {
    /// d indices into the cloud, in basis order.
    std::vector<std::size_t> indices;
    /// |det[w_1 ... w_d]| / d!
    double volume = 0.0;
    int swaps = 0;
    int restarts_used = 0;
    int best_restart = 0;
};

/// Swap improvements must beat this factor on |det|.
inline constexpr double kSwapImprovement = 1.0 + 1e-9;

/**
 * Locally maximal volume simplex conv{0, w_1, ..., w_d} with w_i from the
 * cloud: greedy initialization followed by single-vertex swaps until no swap
 * grows |det| by more than kSwapImprovement. Restart 0 starts greedily from
 * the longest point, later restarts from a seeded random point; the largest
 * volume wins, ties going to the earlier restart.
 *
 * Throws DegenerateCloud when the cloud does not span R^d.
 */
SimplexResult max_volume_simplex_at_origin(const PointCloud& l, int restarts = 3,
                                           std::uint64_t seed = 0, const Tolerance& tol = {});

/// Brute-force maximum of |det| over all d-subsets; test oracle only.
SimplexResult exhaustive_max_volume_simplex(const PointCloud& l, std::size_t budget = 5'000'000);

struct Lemma23Check {
    /// max_i |t_i| - 1 over the basis coefficients t of every cloud point.
    double zonotope_margin = 0.0;
    std::size_t worst_point = 0;
    /// Worst barycentric violation of the zonotope vertices with respect to
    /// -2d·S + (w_1 + ... + w_d).
    double simplex_margin = 0.0;
};

inline constexpr double kInclusionSlack = 1e-8;

class InclusionViolated : public GeometryError {
public:
    InclusionViolated(const std::string& what, Lemma23Check check)
        : GeometryError(Errc::InclusionViolated, what), check_(check) {}
    const Lemma23Check& check() const noexcept { return check_; }

private:
    Lemma23Check check_;
};

/**
 * Checks L ⊂ sum_i [-w_i, w_i] ⊂ -2d·S + (w_1 + ... + w_d) for the simplex
 * S = conv{0, w_1, ..., w_d}. The second inclusion is tested at all 2^d
 * zonotope vertices. Throws InclusionViolated when either margin exceeds
 * kInclusionSlack.
 */
Lemma23Check verify_lemma23_inclusions(const PointCloud& l, const SimplexResult& s,
                                       const Tolerance& tol = {});

}  // namespace steinitz
