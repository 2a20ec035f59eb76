#include "steinitz/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace steinitz {

namespace {

constexpr double kPivotEps = 1e-11;

// Dense Phase-1 tableau: rows = constraints, columns = [λ | artificials | rhs].
struct Tableau {
    Matrix t;
    std::vector<Eigen::Index> basis;
    Eigen::Index n_struct;
    Eigen::Index n_rows;

    Eigen::Index rhs() const { return t.cols() - 1; }

    void pivot(Eigen::Index r, Eigen::Index c) {
        t.row(r) /= t(r, c);
        for (Eigen::Index i = 0; i < n_rows; ++i) {
            if (i == r) continue;
            const double f = t(i, c);
            if (f != 0.0) t.row(i) -= f * t.row(r);
        }
        basis[static_cast<std::size_t>(r)] = c;
    }

    // Phase-1 reduced costs: c_j - sum over rows of the artificial-row entries.
    Eigen::RowVectorXd reduced_costs() const {
        Eigen::RowVectorXd cost = Eigen::RowVectorXd::Zero(t.cols() - 1);
        cost.segment(n_struct, n_rows).setOnes();
        Eigen::RowVectorXd rc = cost;
        for (Eigen::Index i = 0; i < n_rows; ++i) {
            const double cb = basis[static_cast<std::size_t>(i)] >= n_struct ? 1.0 : 0.0;
            if (cb != 0.0) rc -= cb * t.row(i).head(t.cols() - 1);
        }
        return rc;
    }
};

}  // namespace

HullMembership initial_convex_combination(const PointCloud& cloud, const Vector& target,
                                          const Tolerance& tol) {
    const int d = cloud.dim;
    if (target.size() != d) throw GeometryError(Errc::InvalidArgument, "target has wrong dimension");
    const auto m = static_cast<Eigen::Index>(cloud.size());
    const Eigen::Index rows = d + 1;

    HullMembership out;
    if (m == 0) {
        out.witness = target.norm() > 0.0 ? Vector(target.normalized()) : Vector(Vector::Unit(d, 0));
        out.infeasibility = 1.0;
        return out;
    }

    double scale = std::max(1.0, target.cwiseAbs().maxCoeff());
    for (const auto& q : cloud.points) scale = std::max(scale, q.cwiseAbs().maxCoeff());

    Tableau tab;
    tab.n_struct = m;
    tab.n_rows = rows;
    tab.t = Matrix::Zero(rows, m + rows + 1);
    std::vector<double> sign(static_cast<std::size_t>(rows), 1.0);
    for (Eigen::Index j = 0; j < m; ++j) {
        tab.t.col(j).head(d) = cloud.points[static_cast<std::size_t>(j)] / scale;
        tab.t(d, j) = 1.0;
    }
    tab.t.col(tab.rhs()).head(d) = target / scale;
    tab.t(d, tab.rhs()) = 1.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (tab.t(i, tab.rhs()) < 0.0) {
            tab.t.row(i) *= -1.0;
            sign[static_cast<std::size_t>(i)] = -1.0;
        }
        tab.t(i, m + i) = 1.0;
        tab.basis.push_back(m + i);
    }

    const int max_pivots = 50 * static_cast<int>(m + rows) + 1000;
    for (int it = 0; it < max_pivots; ++it) {
        const Eigen::RowVectorXd rc = tab.reduced_costs();
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < rc.size(); ++j) {
            if (rc(j) < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        Eigen::Index leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double a = tab.t(i, enter);
            if (a <= kPivotEps) continue;
            const double ratio = tab.t(i, tab.rhs()) / a;
            if (ratio < best_ratio - 1e-15 ||
                (std::abs(ratio - best_ratio) <= 1e-15 &&
                 tab.basis[static_cast<std::size_t>(i)] < tab.basis[static_cast<std::size_t>(leave)])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave < 0) break;  // unbounded ray; cannot happen for Phase 1
        tab.pivot(leave, enter);
    }

    double artificial = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i)
        if (tab.basis[static_cast<std::size_t>(i)] >= m) artificial += std::max(0.0, tab.t(i, tab.rhs()));
    out.infeasibility = artificial * scale;

    if (artificial <= tol.feas_eps) {
        out.feasible = true;
        out.weights = Vector::Zero(m);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Eigen::Index b = tab.basis[static_cast<std::size_t>(i)];
            if (b < m) out.weights(b) = std::max(0.0, tab.t(i, tab.rhs()));
        }
        const double total = out.weights.sum();
        if (total > 0.0) out.weights /= total;
        return out;
    }

    // Duals y_i = c_art - reduced cost of artificial i, mapped back through the row flips.
    const Eigen::RowVectorXd rc = tab.reduced_costs();
    Vector y(rows);
    for (Eigen::Index i = 0; i < rows; ++i)
        y(i) = sign[static_cast<std::size_t>(i)] * (1.0 - rc(m + i));
    Vector u = y.head(d);
    const double n = u.norm();
    out.witness = n > 0.0 ? Vector(u / n) : Vector(Vector::Unit(d, 0));
    return out;
}

namespace {

Vector represented_point(const PointCloud& cloud, const std::vector<std::size_t>& support,
                         const std::vector<double>& lambda, const Vector& anchor, double mu) {
    KahanVectorSum acc(cloud.dim);
    acc.add(mu * anchor);
    for (std::size_t k = 0; k < support.size(); ++k) acc.add(lambda[k] * cloud.points[support[k]]);
    return acc.value();
}

}  // namespace

CaratheodoryResult anchored_caratheodory(const PointCloud& cloud, const Vector& target,
                                         const Vector& anchor, const Tolerance& tol) {
    const int d = cloud.dim;
    if (anchor.size() != d) throw GeometryError(Errc::InvalidArgument, "anchor has wrong dimension");
    const HullMembership start = initial_convex_combination(cloud, target, tol);
    if (!start.feasible)
        throw GeometryError(Errc::TargetNotInHull, "target is not in the convex hull of the cloud");

    std::vector<std::size_t> support;
    std::vector<double> lambda;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double w = start.weights(static_cast<Eigen::Index>(i));
        if (w > 0.0) {
            support.push_back(i);
            lambda.push_back(w);
        }
    }
    double mu = 0.0;

    CaratheodoryResult res;
    const Vector origin_point = represented_point(cloud, support, lambda, anchor, mu);
    const auto dd = static_cast<std::size_t>(d);

    while (support.size() > dd) {
        // Affine dependence among the first d + 1 support points, relative to the anchor.
        Matrix diff(d, d + 1);
        for (Eigen::Index k = 0; k <= d; ++k)
            diff.col(k) = cloud.points[support[static_cast<std::size_t>(k)]] - anchor;
        Eigen::FullPivLU<Matrix> lu(diff);
        Vector c = lu.kernel().col(0);
        c /= c.cwiseAbs().maxCoeff();
        if (c.sum() < 0.0 || (c.sum() == 0.0 && c.maxCoeff() <= 0.0)) c = -c;

        std::size_t drop = 0;
        double step = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k <= dd; ++k) {
            const double ck = c(static_cast<Eigen::Index>(k));
            if (ck <= kPivotEps) continue;
            const double ratio = lambda[k] / ck;
            if (ratio < step) {
                step = ratio;
                drop = k;
            }
        }
        for (std::size_t k = 0; k <= dd; ++k)
            lambda[k] = std::max(0.0, lambda[k] - step * c(static_cast<Eigen::Index>(k)));
        lambda[drop] = 0.0;
        mu += step * c.sum();

        std::vector<std::size_t> next_support;
        std::vector<double> next_lambda;
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (lambda[k] > 0.0) {
                next_support.push_back(support[k]);
                next_lambda.push_back(lambda[k]);
            }
        }
        support = std::move(next_support);
        lambda = std::move(next_lambda);
        ++res.reduction_steps;

        const Vector now = represented_point(cloud, support, lambda, anchor, mu);
        res.max_step_drift = std::max(res.max_step_drift, (now - origin_point).norm());
    }

    res.indices = support;
    res.coefficients = lambda;
    res.anchor_coefficient = mu;
    res.residual = (represented_point(cloud, support, lambda, anchor, mu) - target).norm();
    return res;
}

}  // namespace steinitz
