#include "steinitz/polar_center.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace steinitz {

WeightedSystem WeightedSystem::uniform(UnitHalfspaceSystem h) {
    WeightedSystem w;
    w.weights.assign(h.normals.size(), 1.0);
    w.system = std::move(h);
    return w;
}

void WeightedSystem::validate() const {
    if (weights.size() != system.normals.size())
        throw GeometryError(Errc::InvalidArgument, "one weight per normal required");
    for (double b : weights)
        if (!(b > 0.0) || !std::isfinite(b))
            throw GeometryError(Errc::InvalidArgument, "weights must be positive and finite");
}

namespace {

// Slacks 1 - <x, v_i>; throws when any is non-positive.
std::vector<double> slacks(const WeightedSystem& w, const Vector& x) {
    if (x.size() != w.system.dim)
        throw GeometryError(Errc::InvalidArgument, "point has wrong dimension");
    std::vector<double> s;
    s.reserve(w.system.normals.size());
    for (const auto& v : w.system.normals) {
        const double si = 1.0 - x.dot(v);
        if (!(si > 0.0))
            throw GeometryError(Errc::InfeasiblePoint, "point is not strictly feasible");
        s.push_back(si);
    }
    return s;
}

double log_objective_from(const WeightedSystem& w, const std::vector<double>& s) {
    KahanSum acc;
    for (std::size_t i = 0; i < s.size(); ++i) acc.add(w.weights[i] * std::log(s[i]));
    return acc.value();
}

// sum_i beta_i v_i / s_i; the gradient is its negation.
Vector weighted_image_sum(const WeightedSystem& w, const std::vector<double>& s) {
    KahanVectorSum acc(w.system.dim);
    for (std::size_t i = 0; i < s.size(); ++i) acc.add((w.weights[i] / s[i]) * w.system.normals[i]);
    return acc.value();
}

Matrix neg_hessian_from(const WeightedSystem& w, const std::vector<double>& s) {
    Matrix h = Matrix::Zero(w.system.dim, w.system.dim);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& v = w.system.normals[i];
        h.noalias() += (w.weights[i] / (s[i] * s[i])) * v * v.transpose();
    }
    return h;
}

// Largest step keeping every slack positive, scaled by the fraction-to-boundary rule.
double boundary_step(const WeightedSystem& w, const std::vector<double>& s, const Vector& dir) {
    double t_max = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double rate = w.system.normals[i].dot(dir);
        if (rate > 0.0) t_max = std::min(t_max, s[i] / rate);
    }
    return std::min(1.0, 0.99 * t_max);
}

}  // namespace

double log_objective(const WeightedSystem& w, const Vector& x) {
    w.validate();
    return log_objective_from(w, slacks(w, x));
}

Vector gradient(const WeightedSystem& w, const Vector& x) {
    w.validate();
    return -weighted_image_sum(w, slacks(w, x));
}

Matrix neg_hessian(const WeightedSystem& w, const Vector& x) {
    w.validate();
    return neg_hessian_from(w, slacks(w, x));
}

CenterResult solve_center(const WeightedSystem& w, const Tolerance& tol, const CenterOptions& opts) {
    w.validate();
    tol.validate();
    const int d = w.system.dim;
    if (!opts.assume_bounded) {
        const PointCloud normals(d, w.system.normals);
        if (!(inscribed_radius_at_origin(normals, tol) > 0.0))
            throw GeometryError(Errc::UnboundedPolytope,
                                "origin is not interior to the convex hull of the normals");
    }

    double scale = 1.0;
    for (std::size_t i = 0; i < w.weights.size(); ++i) scale += w.weights[i] * w.system.normals[i].norm();
    const double threshold = tol.grad_eps * scale;
    constexpr double kArmijo = 0.01;
    constexpr double kMinFeasibleSlack = 1e-12;

    CenterResult res;
    res.center = opts.start ? *opts.start : Vector::Zero(d);
    std::vector<double> s = slacks(w, res.center);
    double f = log_objective_from(w, s);
    Vector image_sum = weighted_image_sum(w, s);
    res.objective_trace.push_back(f);

    auto newton_direction = [&](const Vector& grad) {
        Eigen::LLT<Matrix> llt(neg_hessian_from(w, s));
        if (llt.info() != Eigen::Success)
            throw GeometryError(Errc::UnboundedPolytope, "barrier Hessian is not positive definite");
        return Vector(llt.solve(grad));
    };

    for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
        if (image_sum.norm() <= threshold) {
            res.converged = true;
            break;
        }
        const Vector grad = -image_sum;
        const Vector dir = newton_direction(grad);
        const double slope = grad.dot(dir);

        double t = boundary_step(w, s, dir);
        bool accepted = false;
        for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
            // Objective change as sum beta_i log1p(-t <dir, v_i> / s_i): no cancellation near the optimum.
            KahanSum gain;
            bool feasible = true;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const double rel = -t * dir.dot(w.system.normals[i]) / s[i];
                if (!(rel > -1.0) || !(s[i] * (1.0 + rel) >= kMinFeasibleSlack)) {
                    feasible = false;
                    break;
                }
                gain.add(w.weights[i] * std::log1p(rel));
            }
            if (!feasible) continue;
            if (gain.value() >= kArmijo * t * slope) {
                res.center += t * dir;
                s = slacks(w, res.center);
                f += gain.value();
                accepted = true;
                break;
            }
        }
        if (!accepted) break;  // no ascent possible at working precision
        image_sum = weighted_image_sum(w, s);
        res.objective_trace.push_back(f);
        if (!std::isfinite(f) || res.center.norm() > 1e150)
            throw GeometryError(Errc::UnboundedPolytope, "Newton iterates diverge");
    }

    // Past the stopping threshold, full Newton steps are kept while they
    // shrink the residual; downstream hull tests see the sharper identity.
    constexpr int kPolishSteps = 3;
    for (int k = 0; res.converged && k < kPolishSteps; ++k) {
        const double before = image_sum.norm();
        if (before == 0.0) break;
        const Vector dir = newton_direction(-image_sum);
        const Vector trial = res.center + dir;
        std::vector<double> ts;
        try {
            ts = slacks(w, trial);
        } catch (const GeometryError&) {
            break;
        }
        const Vector trial_sum = weighted_image_sum(w, ts);
        if (!(trial_sum.norm() < before)) break;
        KahanSum gain;
        for (std::size_t i = 0; i < s.size(); ++i)
            gain.add(w.weights[i] * std::log1p(-dir.dot(w.system.normals[i]) / s[i]));
        // At this distance the true gain is below rounding; only a clear loss rejects the step.
        if (gain.value() < -1e-14 * std::max(1.0, std::abs(f))) break;
        res.center = trial;
        s = std::move(ts);
        f += std::max(0.0, gain.value());
        image_sum = trial_sum;
        res.objective_trace.push_back(f);
    }

    res.residual = image_sum.norm();
    res.log_objective = log_objective_from(w, s);
    if (!res.converged) res.converged = res.residual <= threshold;
    return res;
}

double verify_zero_sum(const WeightedSystem& w, const Vector& c, const Tolerance& tol) {
    w.validate();
    slacks(w, c);
    KahanVectorSum acc(w.system.dim);
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        acc.add(w.weights[i] * vertex_correspondence(w.system.normals[i], c, tol));
    return acc.value().norm();
}

}  // namespace steinitz
