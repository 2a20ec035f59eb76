#pragma once

// Independent reference computations for the unit tests and the acceptance
// runner. Nothing here calls into the library code it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "steinitz/polarity.hpp"
#include "steinitz/rng.hpp"

namespace testsupport {

using steinitz::Matrix;
using steinitz::PointCloud;
using steinitz::Vector;

inline Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

inline PointCloud cloud(int d, std::initializer_list<std::initializer_list<double>> pts) {
    PointCloud q;
    q.dim = d;
    for (const auto& p : pts) q.points.push_back(vec(p));
    return q;
}

inline PointCloud cross_polytope(int d, double scale = 1.0) {
    PointCloud q;
    q.dim = d;
    for (int i = 0; i < d; ++i) {
        for (double s : {1.0, -1.0}) {
            Vector v = Vector::Zero(d);
            v(i) = s * scale;
            q.points.push_back(v);
        }
    }
    return q;
}

inline Vector random_unit(steinitz::Xoshiro256& rng, int d) {
    Vector v(d);
    do {
        for (int i = 0; i < d; ++i) v(i) = rng.normal();
    } while (v.norm() < 1e-6);
    return v.normalized();
}

inline Matrix random_matrix(steinitz::Xoshiro256& rng, int n, double lo = -1.0, double hi = 1.0) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

// Random points with radii in [r_lo, r_hi]; the origin is interior with
// overwhelming probability once m is comfortably above d.
inline PointCloud random_shell(steinitz::Xoshiro256& rng, int d, std::size_t m, double r_lo = 1.0,
                               double r_hi = 2.0) {
    PointCloud q;
    q.dim = d;
    for (std::size_t i = 0; i < m; ++i) q.points.push_back(random_unit(rng, d) * rng.uniform(r_lo, r_hi));
    return q;
}

inline double cofactor_det(const Matrix& m) {
    const auto n = m.rows();
    if (n == 1) return m(0, 0);
    double total = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        total += ((j % 2 == 0) ? 1.0 : -1.0) * m(0, j) * cofactor_det(minor);
    }
    return total;
}

inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Distance from the origin to the boundary of conv(q), found by testing every
// hyperplane through d points for being a supporting hyperplane. Returns 0
// when the origin is not interior.
inline double facet_inradius(const PointCloud& q) {
    const int d = q.dim;
    const std::size_t m = q.size();
    if (m < static_cast<std::size_t>(d)) return 0.0;
    double scale = 1.0;
    for (const auto& p : q.points) scale = std::max(scale, p.norm());
    const double eps = 1e-10 * scale;

    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
        // normal n orthogonal to p_i - p_0
        Matrix diffs(d - 1 > 0 ? d - 1 : 1, d);
        Vector normal;
        if (d == 1) {
            normal = Vector::Ones(1);
        } else {
            for (int r = 1; r < d; ++r) diffs.row(r - 1) = (q.points[idx[r]] - q.points[idx[0]]).transpose();
            Eigen::FullPivLU<Matrix> lu(diffs);
            lu.setThreshold(1e-10);
            const Matrix ker = lu.kernel();
            if (ker.cols() != 1) continue;
            normal = ker.col(0).normalized();
        }
        const double offset = normal.dot(q.points[idx[0]]);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& p : q.points) {
            const double t = normal.dot(p);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        if (hi <= offset + eps) {
            any = true;
            best = std::min(best, offset);
        } else if (lo >= offset - eps) {
            any = true;
            best = std::min(best, -offset);
        }
    } while (next_subset(idx, m));
    if (!any) return 0.0;
    return std::max(0.0, best);
}

// Indices of points lying on some supporting hyperplane spanned by d of
// them. For points in general position these are exactly the extreme points.
inline std::vector<std::size_t> generic_extreme_points(const PointCloud& q) {
    const int d = q.dim;
    const std::size_t m = q.size();
    std::vector<bool> extreme(m, false);
    double scale = 1.0;
    for (const auto& p : q.points) scale = std::max(scale, p.norm());
    const double eps = 1e-10 * scale;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
        Matrix diffs(d - 1, d);
        for (int r = 1; r < d; ++r) diffs.row(r - 1) = (q.points[idx[r]] - q.points[idx[0]]).transpose();
        Eigen::FullPivLU<Matrix> lu(diffs);
        lu.setThreshold(1e-10);
        const Matrix ker = lu.kernel();
        if (ker.cols() != 1) continue;
        const Vector normal = ker.col(0).normalized();
        const double offset = normal.dot(q.points[idx[0]]);
        bool below = true;
        bool above = true;
        for (const auto& p : q.points) {
            const double t = normal.dot(p) - offset;
            below = below && t <= eps;
            above = above && t >= -eps;
        }
        if (below || above)
            for (std::size_t i : idx) extreme[i] = true;
    } while (next_subset(idx, m));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i)
        if (extreme[i]) out.push_back(i);
    return out;
}

inline double support(const PointCloud& q, const Vector& u) {
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& p : q.points) h = std::max(h, u.dot(p));
    return h;
}

// min of the support function over `n` random directions: never below the
// true inradius when the origin is interior.
inline double sampled_support_min(const PointCloud& q, std::size_t n, std::uint64_t seed) {
    steinitz::Xoshiro256 rng(seed);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) best = std::min(best, support(q, random_unit(rng, q.dim)));
    return best;
}

struct P2 {
    double x;
    double y;
};

inline double cross(const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
inline std::vector<P2> hull2d(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline double polygon_area(const std::vector<P2>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % poly.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * std::abs(a);
}

// Sutherland-Hodgman clip of `subject` by the convex counter-clockwise `clip`.
inline std::vector<P2> clip_polygon(std::vector<P2> subject, const std::vector<P2>& clip) {
    for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
        const P2 a = clip[e];
        const P2 b = clip[(e + 1) % clip.size()];
        auto inside = [&](const P2& p) { return cross(a, b, p) >= 0; };
        auto intersect = [&](const P2& p, const P2& q) {
            const double s = cross(a, b, p);
            const double t = cross(a, b, q);
            const double w = s / (s - t);
            return P2{p.x + w * (q.x - p.x), p.y + w * (q.y - p.y)};
        };
        std::vector<P2> out;
        for (std::size_t i = 0; i < subject.size(); ++i) {
            const P2& cur = subject[i];
            const P2& prev = subject[(i + subject.size() - 1) % subject.size()];
            if (inside(cur)) {
                if (!inside(prev)) out.push_back(intersect(prev, cur));
                out.push_back(cur);
            } else if (inside(prev)) {
                out.push_back(intersect(prev, cur));
            }
        }
        subject = std::move(out);
    }
    return subject;
}

// Exact area of K ∩ (2x − K) for a planar point cloud K.
inline double exact_intersection_area(const PointCloud& k, const Vector& x) {
    std::vector<P2> pts;
    for (const auto& p : k.points) pts.push_back({p(0), p(1)});
    const std::vector<P2> hull = hull2d(pts);
    std::vector<P2> reflected;
    for (const auto& p : hull) reflected.push_back({2.0 * x(0) - p.x, 2.0 * x(1) - p.y});
    // point reflection keeps the orientation counter-clockwise
    const std::vector<P2> inter = clip_polygon(hull, reflected);
    return inter.size() < 3 ? 0.0 : polygon_area(inter);
}

}  // namespace testsupport
