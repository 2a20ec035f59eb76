#include "steinitz/polarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <tuple>

namespace steinitz {

PointCloud::PointCloud(int d, std::vector<Vector> pts) : dim(d), points(std::move(pts)) {}

void PointCloud::validate() const {
    if (dim < 1) throw GeometryError(Errc::InvalidArgument, "dimension must be at least 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim)
            throw GeometryError(Errc::InvalidArgument,
                                "point " + std::to_string(i) + " has wrong dimension");
        if (!points[i].allFinite())
            throw GeometryError(Errc::InvalidArgument,
                                "point " + std::to_string(i) + " has non-finite coordinates");
    }
}

std::pair<PointCloud, std::vector<std::size_t>> PointCloud::dedup(double eps) const {
    PointCloud out;
    out.dim = dim;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const bool seen = std::any_of(out.points.begin(), out.points.end(), [&](const Vector& p) {
            return (p - points[i]).norm() <= eps;
        });
        if (!seen) {
            out.points.push_back(points[i]);
            index.push_back(i);
        }
    }
    return {std::move(out), std::move(index)};
}

PointCloud PointCloud::scaled(double factor) const {
    PointCloud out;
    out.dim = dim;
    out.points.reserve(points.size());
    for (const auto& p : points) out.points.push_back(factor * p);
    return out;
}

PointCloud PointCloud::subset(const std::vector<std::size_t>& indices) const {
    PointCloud out;
    out.dim = dim;
    for (auto i : indices) out.points.push_back(points.at(i));
    return out;
}

UnitHalfspaceSystem polar_of_cloud(const PointCloud& q) { return {q.dim, q.points}; }

namespace {

Matrix normal_rows(const UnitHalfspaceSystem& h) {
    Matrix n(static_cast<Eigen::Index>(h.normals.size()), h.dim);
    for (std::size_t i = 0; i < h.normals.size(); ++i)
        n.row(static_cast<Eigen::Index>(i)) = h.normals[i].transpose();
    return n;
}

double max_normal_norm(const UnitHalfspaceSystem& h) {
    double r = 0.0;
    for (const auto& v : h.normals) r = std::max(r, v.norm());
    return r;
}

// Returns ±u when it is a recession direction of rows·u <= ray_tol.
std::optional<Vector> signed_ray(const Matrix& rows, Vector u, double ray_tol) {
    u.normalize();
    const Vector s = rows * u;
    if (s.size() == 0 || s.maxCoeff() <= ray_tol) return u;
    if ((-s).maxCoeff() <= ray_tol) return Vector(-u);
    return std::nullopt;
}

}  // namespace

std::optional<Vector> find_recession_ray(const UnitHalfspaceSystem& h, const Tolerance& tol,
                                         std::size_t budget) {
    const int d = h.dim;
    if (d < 1) throw GeometryError(Errc::InvalidArgument, "dimension must be at least 1");
    const Matrix rows = normal_rows(h);
    if (h.normals.empty()) {
        Vector e = Vector::Zero(d);
        e(0) = 1.0;
        return e;
    }
    const double ray_tol = tol.sing_eps * std::max(1.0, max_normal_norm(h));

    Eigen::FullPivLU<Matrix> full(rows);
    full.setThreshold(tol.sing_eps);
    if (full.rank() < d) return signed_ray(rows, full.kernel().col(0), ray_tol);

    if (d == 1) {
        if (auto r = signed_ray(rows, Vector::Ones(1), ray_tol)) return r;
        return std::nullopt;
    }

    const std::size_t m = h.normals.size();
    const auto k = static_cast<std::size_t>(d - 1);
    if (binomial_capped(m, k, budget) > budget)
        throw GeometryError(Errc::DimensionTooLarge, "too many subsets for recession-ray search");
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Matrix sub(d - 1, d);
    do {
        for (std::size_t i = 0; i < k; ++i)
            sub.row(static_cast<Eigen::Index>(i)) = rows.row(static_cast<Eigen::Index>(idx[i]));
        Eigen::FullPivLU<Matrix> lu(sub);
        lu.setThreshold(tol.sing_eps);
        if (lu.rank() != d - 1) continue;
        if (auto r = signed_ray(rows, lu.kernel().col(0), ray_tol)) return r;
    } while (next_combination(idx, m));
    return std::nullopt;
}

namespace {

struct Candidate {
    std::size_t ordinal;
    Vector x;
    std::vector<std::size_t> subset;
};

void scan_subsets(const Matrix& rows, int d, const Tolerance& tol, std::size_t stride,
                  std::size_t offset, std::vector<Candidate>& out) {
    const auto m = static_cast<std::size_t>(rows.rows());
    const auto k = static_cast<std::size_t>(d);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const Vector ones = Vector::Ones(d);
    Matrix sub(d, d);
    std::size_t ordinal = 0;
    do {
        if (ordinal++ % stride != offset) continue;
        for (std::size_t i = 0; i < k; ++i)
            sub.row(static_cast<Eigen::Index>(i)) = rows.row(static_cast<Eigen::Index>(idx[i]));
        auto x = try_solve(sub, ones, tol.sing_eps);
        if (!x || !x->allFinite()) continue;
        if ((rows * *x).maxCoeff() > 1.0 + tol.feas_eps) continue;
        out.push_back({ordinal - 1, std::move(*x), idx});
    } while (next_combination(idx, m));
}

}  // namespace

VertexEnumeration enumerate_vertices(const UnitHalfspaceSystem& h, const Tolerance& tol,
                                     std::size_t budget, int jobs) {
    const int d = h.dim;
    const std::size_t m = h.normals.size();
    if (binomial_capped(m, static_cast<std::size_t>(d), budget) > budget)
        throw GeometryError(Errc::DimensionTooLarge,
                            "C(" + std::to_string(m) + ", " + std::to_string(d) +
                                ") exceeds the subset budget");
    if (find_recession_ray(h, tol, budget))
        throw GeometryError(Errc::Unbounded, "halfspace system has a recession direction");

    const Matrix rows = normal_rows(h);
    std::vector<Candidate> found;
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1) {
        scan_subsets(rows, d, tol, 1, 0, found);
    } else {
        std::vector<std::vector<Candidate>> parts(workers);
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < workers; ++t)
            threads.emplace_back([&, t] { scan_subsets(rows, d, tol, workers, t, parts[t]); });
        for (auto& th : threads) th.join();
        for (auto& p : parts)
            for (auto& c : p) found.push_back(std::move(c));
        std::sort(found.begin(), found.end(),
                  [](const Candidate& a, const Candidate& b) { return a.ordinal < b.ordinal; });
    }

    constexpr double kMergeRadius = 1e-9;
    VertexEnumeration out;
    for (auto& c : found) {
        const bool duplicate =
            std::any_of(out.vertices.begin(), out.vertices.end(),
                        [&](const Vector& v) { return (v - c.x).norm() <= kMergeRadius; });
        if (duplicate) continue;
        out.vertices.push_back(std::move(c.x));
        out.defining_subsets.push_back(std::move(c.subset));
    }
    return out;
}

Vector vertex_correspondence(const Vector& v, const Vector& c, const Tolerance& tol) {
    if (v.size() != c.size())
        throw GeometryError(Errc::InvalidArgument, "dimension mismatch in vertex correspondence");
    const double slack = 1.0 - c.dot(v);
    if (!(slack > tol.feas_eps))
        throw GeometryError(Errc::CenterNotInterior, "center violates <c, v> < 1");
    return v / slack;
}

double inscribed_radius_at_origin(const PointCloud& w, const Tolerance& tol, std::size_t budget,
                                  int jobs) {
    return certify_ball_in_hull(w, 1.0, tol, budget, jobs).inscribed_radius;
}

BallCertificate certify_ball_in_hull(const PointCloud& q, double radius, const Tolerance& tol,
                                     std::size_t budget, int jobs) {
    if (!(radius > 0.0)) throw GeometryError(Errc::InvalidArgument, "radius must be positive");
    if (q.dim < 1) throw GeometryError(Errc::InvalidArgument, "dimension must be at least 1");
    const UnitHalfspaceSystem h = polar_of_cloud(q);

    BallCertificate cert;
    if (auto ray = find_recession_ray(h, tol, budget)) {
        cert.inscribed_radius = 0.0;
        cert.witness = *ray;
        cert.witness_support = 0.0;
        for (const auto& p : q.points) cert.witness_support = std::max(cert.witness_support, ray->dot(p));
        if (q.points.empty()) cert.witness_support = 0.0;
        cert.contained = false;
        return cert;
    }

    const VertexEnumeration en = enumerate_vertices(h, tol, budget, jobs);
    std::size_t far = 0;
    double far_norm = -1.0;
    for (std::size_t i = 0; i < en.vertices.size(); ++i) {
        const double n = en.vertices[i].norm();
        if (n > far_norm) {
            far_norm = n;
            far = i;
        }
    }
    if (en.vertices.empty() || !(far_norm > 0.0))
        throw GeometryError(Errc::VerificationFailed, "bounded polar without vertices");

    cert.inscribed_radius = 1.0 / far_norm;
    cert.witness = en.vertices[far] / far_norm;
    double support = -std::numeric_limits<double>::infinity();
    for (const auto& p : q.points) support = std::max(support, cert.witness.dot(p));
    cert.witness_support = support;
    cert.contained = cert.inscribed_radius >= radius - tol.feas_eps;
    return cert;
}

double atlantis_radius(double lambda) {
    if (!(lambda > 0.0)) throw GeometryError(Errc::InvalidArgument, "lambda must be positive");
    return lambda / (1.0 + lambda);
}

}  // namespace steinitz
