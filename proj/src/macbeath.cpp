#include "steinitz/macbeath.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "steinitz/caratheodory.hpp"
#include "steinitz/rng.hpp"

namespace steinitz {

ConvexBody::ConvexBody(const PointCloud& k, const Tolerance& tol) : cloud_(k) {
    cloud_.validate();
    const int d = cloud_.dim;
    if (cloud_.size() < static_cast<std::size_t>(d) + 1)
        throw GeometryError(Errc::DegenerateCloud, "a full-dimensional body needs d + 1 points");
    origin_ = Vector::Zero(d);
    for (const auto& p : cloud_.points) origin_ += p;
    origin_ /= static_cast<double>(cloud_.size());

    PointCloud centred;
    centred.dim = d;
    for (const auto& p : cloud_.points) centred.points.push_back(p - origin_);
    if (find_recession_ray(polar_of_cloud(centred), tol))
        throw GeometryError(Errc::DegenerateCloud, "body is not full-dimensional");
    normals_ = enumerate_vertices(polar_of_cloud(centred), tol).vertices;
    normal_rows_ = Matrix(static_cast<Eigen::Index>(normals_.size()), d);
    for (std::size_t j = 0; j < normals_.size(); ++j)
        normal_rows_.row(static_cast<Eigen::Index>(j)) = normals_[j].transpose();

    lo_ = cloud_.points.front();
    hi_ = cloud_.points.front();
    for (const auto& p : cloud_.points) {
        lo_ = lo_.cwiseMin(p);
        hi_ = hi_.cwiseMax(p);
    }
}

double ConvexBody::box_volume() const { return (hi_ - lo_).prod(); }

bool ConvexBody::contains(const Vector& y, double slack) const {
    return (normal_rows_ * (y - origin_)).maxCoeff() <= 1.0 + slack;
}

double ConvexBody::gauge(const Vector& y) const {
    return std::max(0.0, (normal_rows_ * (y - origin_)).maxCoeff());
}

namespace {

// Fixed sample set: points of the bounding box that fall inside K.
struct SampleSet {
    Matrix inside;  // d x hits
    std::size_t total = 0;
};

// Additive-recurrence (Kronecker) low-discrepancy points with a seeded
// uniform shift: each sample is marginally uniform on the box, so the hit
// fraction stays an unbiased volume estimate, with far less noise than iid
// draws. The step vector is 1/phi^(1..d), phi the root of x^(d+1) = x + 1.
SampleSet draw_samples(const ConvexBody& body, std::size_t n, std::uint64_t seed) {
    const int d = body.dim();
    double phi = 2.0;
    for (int it = 0; it < 200; ++it) phi = std::pow(1.0 + phi, 1.0 / (d + 1));
    Vector step(d);
    Vector pos(d);
    Xoshiro256 rng(seed);
    for (int i = 0; i < d; ++i) {
        step(i) = std::pow(1.0 / phi, i + 1);
        pos(i) = rng.uniform();
    }
    const Vector width = body.box_hi() - body.box_lo();
    std::vector<Vector> kept;
    for (std::size_t s = 0; s < n; ++s) {
        for (int i = 0; i < d; ++i) pos(i) = std::fmod(pos(i) + step(i), 1.0);
        const Vector y = body.box_lo() + width.cwiseProduct(pos);
        if (body.contains(y, 0.0)) kept.push_back(y);
    }
    SampleSet set;
    set.inside = kept.empty() ? Matrix(d, 0) : columns(kept);
    set.total = n;
    return set;
}

// Number of fixed samples y ∈ K with 2x - y ∈ K.
std::size_t count_hits(const ConvexBody& body, const Matrix& rows, const SampleSet& set, const Vector& x) {
    if (set.inside.cols() == 0) return 0;
    const Vector shift = 2.0 * x - body.reference_point();
    const Matrix vals = rows * ((-set.inside).colwise() + shift);
    std::size_t hits = 0;
    for (Eigen::Index j = 0; j < vals.cols(); ++j)
        if (vals.col(j).maxCoeff() <= 1.0) ++hits;
    return hits;
}

VolumeEstimate make_estimate(const ConvexBody& body, std::size_t hits, std::size_t n) {
    VolumeEstimate e;
    e.hits = hits;
    e.samples = n;
    const double p = n ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;
    e.volume = body.box_volume() * p;
    e.stderr_ = n ? body.box_volume() * std::sqrt(p * (1.0 - p) / static_cast<double>(n)) : 0.0;
    return e;
}

Matrix rows_of(const ConvexBody& body) {
    Matrix r(static_cast<Eigen::Index>(body.facet_normals().size()), body.dim());
    for (std::size_t j = 0; j < body.facet_normals().size(); ++j)
        r.row(static_cast<Eigen::Index>(j)) = body.facet_normals()[j].transpose();
    return r;
}

}  // namespace

VolumeEstimate intersection_volume_mc(const PointCloud& k, const Vector& x, std::size_t samples,
                                      std::uint64_t seed, const Tolerance& tol) {
    const ConvexBody body(k, tol);
    if (x.size() != body.dim()) throw GeometryError(Errc::InvalidArgument, "point has wrong dimension");
    const SampleSet set = draw_samples(body, samples, seed);
    return make_estimate(body, count_hits(body, rows_of(body), set, x), samples);
}

double inclusion_factor(const ConvexBody& body, const Vector& p, double bisection_tol) {
    if (!body.contains(p, 0.0) || body.gauge(p) >= 1.0)
        throw GeometryError(Errc::InvalidArgument, "point is not interior to the body");
    double factor = 0.0;
    for (const auto& u : body.cloud().points) {
        const Vector z = p - u;  // -(u - p)
        if (z.norm() == 0.0) continue;
        // Largest s with p + s z ∈ K; the factor for this vertex is 1 / s.
        double lo = 0.0;
        double hi = 1.0;
        while (body.contains(p + hi * z, 0.0)) {
            lo = hi;
            hi *= 2.0;
        }
        while (hi - lo > 0.25 * bisection_tol * lo || lo == 0.0) {
            const double mid = 0.5 * (lo + hi);
            if (body.contains(p + mid * z, 0.0))
                lo = mid;
            else
                hi = mid;
            if (hi - lo < 1e-300) break;
        }
        factor = std::max(factor, 1.0 / (0.5 * (lo + hi)));
    }
    return factor;
}

namespace {

// x -> L^{-1}(x - o) with L L^T the covariance of the points: the search runs
// on a body of unit vertex covariance, where one step size fits every direction.
struct AffineFrame {
    Vector offset;
    Matrix chol;  // L

    Vector to_local(const Vector& x) const { return chol.triangularView<Eigen::Lower>().solve(Vector(x - offset)); }
    Vector to_global(const Vector& y) const { return offset + chol * y; }
    double volume_scale() const { return chol.diagonal().prod(); }
};

AffineFrame whitening_frame(const PointCloud& k) {
    const int d = k.dim;
    AffineFrame f;
    f.offset = Vector::Zero(d);
    for (const auto& p : k.points) f.offset += p;
    f.offset /= static_cast<double>(k.size());
    Matrix cov = Matrix::Zero(d, d);
    for (const auto& p : k.points) cov += (p - f.offset) * (p - f.offset).transpose();
    cov /= static_cast<double>(k.size());
    Eigen::LLT<Matrix> llt(cov);
    if (llt.info() != Eigen::Success) throw GeometryError(Errc::DegenerateCloud, "body is not full-dimensional");
    f.chol = llt.matrixL();
    return f;
}

class HitCounter {
public:
    HitCounter(const ConvexBody& body, std::size_t samples, std::uint64_t seed)
        : body_(body), rows_(rows_of(body)), set_(draw_samples(body, samples, seed)) {}

    std::size_t operator()(const Vector& x) {
        ++evaluations;
        return count_hits(body_, rows_, set_, x);
    }

    int evaluations = 0;

private:
    const ConvexBody& body_;
    Matrix rows_;
    SampleSet set_;
};

// Coordinate pattern search; moves only on a strictly larger hit count.
std::pair<Vector, std::size_t> pattern_search(HitCounter& count, Vector x, double step, double min_step,
                                              int max_evaluations) {
    std::size_t hits = count(x);
    while (step >= min_step && count.evaluations < max_evaluations) {
        Vector best_move = x;
        std::size_t best_hits = hits;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            for (double sgn : {1.0, -1.0}) {
                Vector trial = x;
                trial(i) += sgn * step;
                const std::size_t h = count(trial);
                if (h > best_hits) {
                    best_hits = h;
                    best_move = trial;
                }
            }
        }
        if (best_hits > hits) {
            x = best_move;
            hits = best_hits;
        } else {
            step *= 0.5;
        }
    }
    return {x, hits};
}

// Least-squares quadratic model of the hit count on a grid of half-width
// `radius` around x; returns the model maximizer when the model is concave
// and the maximizer stays inside the grid.
std::optional<Vector> quadratic_refine(HitCounter& count, const Vector& x, double radius) {
    const auto d = static_cast<int>(x.size());
    const int half = d <= 2 ? 3 : (d == 3 ? 2 : 1);
    const int per_axis = 2 * half + 1;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= per_axis;
    const int n_feat = (d + 1) * (d + 2) / 2;

    Matrix a(total, n_feat);
    Vector b(total);
    std::vector<int> digit(static_cast<std::size_t>(d), 0);
    for (long row = 0; row < total; ++row) {
        long r = row;
        Vector u(d);
        for (int i = 0; i < d; ++i) {
            u(i) = radius * static_cast<double>(r % per_axis - half) / half;
            r /= per_axis;
        }
        int col = 0;
        a(row, col++) = 1.0;
        for (int i = 0; i < d; ++i) a(row, col++) = u(i);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) a(row, col++) = u(i) * u(j);
        b(row) = static_cast<double>(count(Vector(x + u)));
    }
    const Vector coef = a.colPivHouseholderQr().solve(b);

    Vector g(d);
    Matrix h(d, d);
    int col = 1;
    for (int i = 0; i < d; ++i) g(i) = coef(col++);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const double c = coef(col++);
            if (i == j) {
                h(i, i) = 2.0 * c;
            } else {
                h(i, j) = c;
                h(j, i) = c;
            }
        }
    Eigen::LLT<Matrix> neg(-h);
    if (neg.info() != Eigen::Success) return std::nullopt;
    const Vector u = neg.solve(g);
    if (u.cwiseAbs().maxCoeff() > radius) return std::nullopt;
    return Vector(x + u);
}

}  // namespace

MacbeathReport find_macbeath_point(const PointCloud& k, const MacbeathConfig& config, const Tolerance& tol) {
    const ConvexBody body(k, tol);
    const int d = body.dim();

    // Both the maximizer and the inclusion factor are affine invariants.
    const AffineFrame frame = whitening_frame(k);
    PointCloud local;
    local.dim = d;
    for (const auto& p : k.points) local.points.push_back(frame.to_local(p));
    const ConvexBody local_body(local, tol);
    HitCounter count(local_body, config.samples, config.seed);
    const double diag = (local_body.box_hi() - local_body.box_lo()).norm();

    Xoshiro256 rng(config.seed ^ 0x5bd1e995ULL);
    std::vector<Vector> starts{local_body.reference_point()};
    for (int r = 0; r < config.restarts; ++r) {
        Vector x = Vector::Zero(d);
        double total = 0.0;
        for (const auto& q : local.points) {
            const double w = -std::log(1.0 - rng.uniform());
            x += w * q;
            total += w;
        }
        starts.push_back(x / total);
    }

    Vector best;
    std::size_t best_hits = 0;
    for (const auto& start : starts) {
        auto [x, hits] = pattern_search(count, start, config.initial_step * diag, config.min_step * diag,
                                        config.max_evaluations);
        if (best.size() == 0 || hits > best_hits) {
            best = x;
            best_hits = hits;
        }
    }
    if (auto refined = quadratic_refine(count, best, config.refine_radius * diag)) {
        if (local_body.gauge(*refined) < 1.0) {
            best = *refined;
            best_hits = count(best);
        }
    }

    MacbeathReport rep;
    rep.samples = config.samples;
    rep.seed = config.seed;
    rep.evaluations = count.evaluations;
    rep.point = frame.to_global(best);

    const HullMembership member = initial_convex_combination(k, rep.point, tol);
    if (!member.feasible || body.gauge(rep.point) >= 1.0)
        throw GeometryError(Errc::VerificationFailed, "estimated Macbeath point left the body");

    const VolumeEstimate est = make_estimate(local_body, best_hits, config.samples);
    rep.volume_at_point = est.volume * frame.volume_scale();
    rep.volume_stderr = est.stderr_ * frame.volume_scale();
    rep.inclusion_factor = inclusion_factor(body, rep.point, config.bisection_tol);
    return rep;
}

}  // namespace steinitz
