#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/polarity.hpp"

namespace steinitz {

struct Instance {
    PointCloud cloud;
    std::string provenance;  ///< "random-seeded", "grundbacher" or "file"
    std::optional<std::uint64_t> seed;
    bool ball_certified = false;
};

/**
 * The (2d+1)-point configuration {±√d e_1, ..., ±√d e_{d-1}, √d e_d, p-, p+}
 * with p- = -√d (e_d + e_1 + ... + e_{d-1}) and
 * p+ = -√d (e_d - e_1 - ... - e_{d-1}). Its hull contains B, but no 2d of
 * its points contain a ball larger than √(d / (d² + d - 1)).
 */
Instance generate_grundbacher(int d);

/// √(d / (d² + d - 1)).
double grundbacher_bound(int d);

/**
 * m points with uniformly random directions and radii in [1, 2], rescaled
 * so that the inscribed radius at the origin is 1 + feas_eps. Draws whose
 * hull misses the origin are redrawn from the same stream, at most 100
 * times (RetryExhausted afterwards).
 */
Instance generate_random_ball_instance(int d, std::size_t m, std::uint64_t seed,
                                       const Tolerance& tol = {});

struct ExhaustiveReport {
    std::vector<std::size_t> best_subset;
    double best_radius = 0.0;
    std::size_t subsets_examined = 0;
};

inline constexpr std::size_t kDefaultExhaustiveBudget = 1'000'000;

/// Inscribed radius of every k-subset (all points when k >= m); the first
/// subset in lexicographic order wins ties. Throws BudgetExceeded.
ExhaustiveReport exhaustive_best_subset(const PointCloud& q, std::size_t k, const Tolerance& tol,
                                        std::size_t budget = kDefaultExhaustiveBudget, int jobs = 1);

}  // namespace steinitz
