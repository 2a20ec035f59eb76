#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "steinitz/polarity.hpp"

namespace steinitz {

/**
 * Full-dimensional V-polytope with a facet description {y : <y - o, u_j> <= 1}
 * obtained as the polar vertices of the cloud recentred at its vertex mean o.
 */
class ConvexBody {
public:
    explicit ConvexBody(const PointCloud& k, const Tolerance& tol = {});

    int dim() const { return cloud_.dim; }
    const PointCloud& cloud() const { return cloud_; }
    const Vector& reference_point() const { return origin_; }
    const std::vector<Vector>& facet_normals() const { return normals_; }
    const Vector& box_lo() const { return lo_; }
    const Vector& box_hi() const { return hi_; }
    double box_volume() const;

    bool contains(const Vector& y, double slack = 1e-12) const;

    /// Smallest t >= 0 with y - o ∈ t (K - o).
    double gauge(const Vector& y) const;

private:
    PointCloud cloud_;
    Vector origin_;
    std::vector<Vector> normals_;
    Matrix normal_rows_;
    Vector lo_;
    Vector hi_;
};

struct VolumeEstimate {
    double volume = 0.0;
    double stderr_ = 0.0;
    std::size_t hits = 0;
    std::size_t samples = 0;
};

/**
 * Monte-Carlo estimate of vol(K ∩ (2x - K)) from `samples` points of the
 * bounding box of K (a randomly shifted Kronecker sequence, shift drawn from
 * `seed`); stderr from the binomial variance of the hit count, which
 * overstates the error of the quasi-random points.
 * Throws DegenerateCloud when K is not full-dimensional.
 */
VolumeEstimate intersection_volume_mc(const PointCloud& k, const Vector& x, std::size_t samples,
                                      std::uint64_t seed, const Tolerance& tol = {});

struct MacbeathConfig {
    std::size_t samples = 200'000;
    std::uint64_t seed = 0;
    /// Random interior starts in addition to the vertex mean.
    int restarts = 2;
    double initial_step = 0.25;  ///< fraction of the bounding-box diagonal
    double min_step = 1e-4;      ///< fraction of the bounding-box diagonal
    int max_evaluations = 5000;
    /// Half-width of the quadratic-fit grid around the pattern-search optimum.
    double refine_radius = 0.05;
    double bisection_tol = 1e-6;
};

/// Exploratory estimate of the Macbeath point; evidence, not proof.
struct MacbeathReport {
    Vector point;
    double volume_at_point = 0.0;
    double volume_stderr = 0.0;
    /// Smallest λ with K - p ⊆ -λ(K - p).
    double inclusion_factor = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    int evaluations = 0;
};

/// Smallest λ with K - p ⊆ -λ(K - p), by ray bisection from p toward the
/// reflection of every vertex. p must be interior to K.
double inclusion_factor(const ConvexBody& body, const Vector& p, double bisection_tol = 1e-6);

/**
 * Pattern search (coordinate moves, halving steps) on the sample-count
 * estimate of vol(K ∩ (2x - K)) with one fixed sample set shared by every
 * evaluation, started from the vertex mean and `restarts` random interior
 * points, followed by a least-squares quadratic fit around the best point.
 * The search runs in the affine frame where the vertices have identity
 * covariance. Reports the inclusion factor at the final point.
 */
MacbeathReport find_macbeath_point(const PointCloud& k, const MacbeathConfig& config = {},
                                   const Tolerance& tol = {});

}  // namespace steinitz
