#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "steinitz/geom_core.hpp"

namespace steinitz {

/// Finite point set in R^dim; the V-representation conv(points).
struct PointCloud {
    int dim = 0;
    std::vector<Vector> points;

    PointCloud() = default;
    PointCloud(int d, std::vector<Vector> pts);

    std::size_t size() const { return points.size(); }

    /// Throws InvalidArgument on dimension mismatch or non-finite entries.
    void validate() const;

    /// Keeps the first of any group of points closer than `eps`. Returns
    /// the surviving cloud and, for each survivor, its original index.
    std::pair<PointCloud, std::vector<std::size_t>> dedup(double eps = 1e-12) const;

    PointCloud scaled(double factor) const;
    PointCloud subset(const std::vector<std::size_t>& indices) const;
};

/// {x : <x, n_i> <= 1 for every normal n_i}.
struct UnitHalfspaceSystem {
    int dim = 0;
    std::vector<Vector> normals;
};

struct VertexEnumeration {
    std::vector<Vector> vertices;
    /// One witness d-tuple of active normals per vertex.
    std::vector<std::vector<std::size_t>> defining_subsets;
};

inline constexpr std::size_t kDefaultSubsetBudget = 5'000'000;

/// Representation exchange: the polar of conv(Q) has the points of Q as its
/// normals.
UnitHalfspaceSystem polar_of_cloud(const PointCloud& q);

/**
 * Looks for a unit direction u != 0 with <u, n_i> <= sing_eps * max|n_i| for
 * every normal. Such a u is a recession direction of the system, so the
 * system is unbounded exactly when one exists.
 *
 * Candidates are the kernel of the normals when they fail to span R^d, and
 * otherwise the one-dimensional kernels of every independent (d-1)-subset
 * (the extreme rays of the pointed recession cone).
 */
std::optional<Vector> find_recession_ray(const UnitHalfspaceSystem& h, const Tolerance& tol,
                                         std::size_t budget = kDefaultSubsetBudget);

/**
 * Vertices of a bounded unit-halfspace system by solving the d x d system of
 * every d-subset of normals and keeping the feasible solutions. Solutions
 * within 1e-9 of one another are merged; the first subset in lexicographic
 * order is kept as the witness. With `jobs` > 1 the subset range is split
 * across threads and merged in subset order, so the result does not depend
 * on `jobs`.
 *
 * Throws Unbounded (carrying no vertices) when a recession ray exists and
 * DimensionTooLarge when C(m, d) exceeds `budget`.
 */
VertexEnumeration enumerate_vertices(const UnitHalfspaceSystem& h, const Tolerance& tol,
                                     std::size_t budget = kDefaultSubsetBudget, int jobs = 1);

/// v / (1 - <c, v>): the vertex of (P - c)° polar corresponding to the
/// vertex v of P°. Throws CenterNotInterior unless <c, v> < 1 - feas_eps.
Vector vertex_correspondence(const Vector& v, const Vector& c, const Tolerance& tol = {});

/// Largest r with r·B ⊆ conv(w), i.e. 1 / max |u| over the vertices u of
/// the polar. Zero when the origin is not interior.
double inscribed_radius_at_origin(const PointCloud& w, const Tolerance& tol,
                                  std::size_t budget = kDefaultSubsetBudget, int jobs = 1);

struct BallCertificate {
    bool contained = false;
    double inscribed_radius = 0.0;
    /// Unit direction along which the support function of conv(Q) equals
    /// the inscribed radius (or is <= 0 when the origin is not interior).
    Vector witness;
    double witness_support = 0.0;
};

BallCertificate certify_ball_in_hull(const PointCloud& q, double radius, const Tolerance& tol,
                                     std::size_t budget = kDefaultSubsetBudget, int jobs = 1);

/// λ / (1 + λ): radius kept after mapping a λ-ball through a change of
/// polarity center lying in the unit ball.
double atlantis_radius(double lambda);

}  // namespace steinitz
