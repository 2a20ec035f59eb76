#include "steinitz/simplex_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "steinitz/rng.hpp"

namespace steinitz {

namespace {

double factorial(int d) {
    double f = 1.0;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

// Greedy: repeatedly add the point with the largest component orthogonal to
// the span of those already chosen.
std::vector<std::size_t> greedy_basis(const PointCloud& l, std::size_t first, bool fixed_first,
                                      const Tolerance& tol) {
    const int d = l.dim;
    std::vector<std::size_t> chosen;
    std::vector<Vector> ortho;
    double scale = 0.0;
    for (const auto& p : l.points) scale = std::max(scale, p.norm());
    while (static_cast<int>(chosen.size()) < d) {
        std::size_t best = l.size();
        double best_norm = -1.0;
        if (chosen.empty() && fixed_first) {
            best = first;
            best_norm = l.points[first].norm();
        } else {
            for (std::size_t j = 0; j < l.size(); ++j) {
                if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
                Vector r = l.points[j];
                for (const auto& e : ortho) r -= e.dot(r) * e;
                const double n = r.norm();
                if (n > best_norm) {
                    best_norm = n;
                    best = j;
                }
            }
        }
        if (best == l.size() || !(best_norm > tol.sing_eps * std::max(1.0, scale)))
            throw GeometryError(Errc::DegenerateCloud, "points do not span the ambient space");
        Vector r = l.points[best];
        for (const auto& e : ortho) r -= e.dot(r) * e;
        for (const auto& e : ortho) r -= e.dot(r) * e;  // second pass for orthogonality
        ortho.push_back(r.normalized());
        chosen.push_back(best);
    }
    return chosen;
}

Matrix basis_matrix(const PointCloud& l, const std::vector<std::size_t>& idx) {
    Matrix w(l.dim, l.dim);
    for (std::size_t i = 0; i < idx.size(); ++i) w.col(static_cast<Eigen::Index>(i)) = l.points[idx[i]];
    return w;
}

Matrix cloud_matrix(const PointCloud& l) {
    Matrix x(l.dim, static_cast<Eigen::Index>(l.size()));
    for (std::size_t j = 0; j < l.size(); ++j) x.col(static_cast<Eigen::Index>(j)) = l.points[j];
    return x;
}

// Swap until no single replacement grows |det| by more than kSwapImprovement.
int local_swap_search(const PointCloud& l, const Matrix& x, std::vector<std::size_t>& idx) {
    int swaps = 0;
    const auto d = static_cast<std::size_t>(l.dim);
    for (;;) {
        const Matrix w = basis_matrix(l, idx);
        Eigen::PartialPivLU<Matrix> lu(w);
        const Matrix t = lu.solve(x);
        double best = kSwapImprovement;
        std::size_t best_pos = d;
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
            for (std::size_t i = 0; i < d; ++i) {
                const double f = std::abs(t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
                if (f > best) {
                    best = f;
                    best_pos = i;
                    best_j = j;
                }
            }
        }
        if (best_pos == d) return swaps;
        idx[best_pos] = best_j;
        ++swaps;
        if (swaps > 100000) throw GeometryError(Errc::VerificationFailed, "swap search did not terminate");
    }
}

}  // namespace

SimplexResult max_volume_simplex_at_origin(const PointCloud& l, int restarts, std::uint64_t seed,
                                           const Tolerance& tol) {
    l.validate();
    if (l.size() < static_cast<std::size_t>(l.dim))
        throw GeometryError(Errc::DegenerateCloud, "fewer points than dimensions");
    restarts = std::max(1, restarts);
    const Matrix x = cloud_matrix(l);
    Xoshiro256 rng(seed);

    SimplexResult best;
    best.volume = -1.0;
    int total_swaps = 0;
    for (int r = 0; r < restarts; ++r) {
        std::vector<std::size_t> idx =
            r == 0 ? greedy_basis(l, 0, false, tol) : greedy_basis(l, rng.index(l.size()), true, tol);
        total_swaps += local_swap_search(l, x, idx);
        const double vol = std::abs(basis_matrix(l, idx).determinant()) / factorial(l.dim);
        if (vol > best.volume) {
            best.volume = vol;
            best.indices = idx;
            best.best_restart = r;
        }
    }
    best.swaps = total_swaps;
    best.restarts_used = restarts;
    if (!(best.volume > 0.0)) throw GeometryError(Errc::DegenerateCloud, "degenerate simplex");
    return best;
}

SimplexResult exhaustive_max_volume_simplex(const PointCloud& l, std::size_t budget) {
    const auto d = static_cast<std::size_t>(l.dim);
    if (binomial_capped(l.size(), d, budget) > budget)
        throw GeometryError(Errc::BudgetExceeded, "too many subsets for exhaustive simplex search");
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    SimplexResult best;
    do {
        const double vol = std::abs(basis_matrix(l, idx).determinant()) / factorial(l.dim);
        if (vol > best.volume) {
            best.volume = vol;
            best.indices = idx;
        }
    } while (next_combination(idx, l.size()));
    if (!(best.volume > 0.0)) throw GeometryError(Errc::DegenerateCloud, "degenerate cloud");
    return best;
}

Lemma23Check verify_lemma23_inclusions(const PointCloud& l, const SimplexResult& s,
                                       const Tolerance& tol) {
    const int d = l.dim;
    if (d > 24) throw GeometryError(Errc::DimensionTooLarge, "2^d zonotope vertices over budget");
    std::vector<Vector> basis;
    for (auto i : s.indices) basis.push_back(l.points.at(i));
    const Matrix w = columns(basis);
    Eigen::PartialPivLU<Matrix> lu(w);
    if (std::abs(det(w, tol.sing_eps)) == 0.0)
        throw GeometryError(Errc::SingularSystem, "simplex is degenerate");

    Lemma23Check check;
    check.zonotope_margin = -1.0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        const Vector t = lu.solve(l.points[j]);
        const double margin = t.cwiseAbs().maxCoeff() - 1.0;
        if (margin > check.zonotope_margin) {
            check.zonotope_margin = margin;
            check.worst_point = j;
        }
    }

    // Vertex z = sum eps_i w_i. Membership in -2d·S + sum w_i means the
    // coefficients of (sum w_i - z) / (2d) in the basis are >= 0 with sum <= 1.
    const Vector sum_w = w.rowwise().sum();
    check.simplex_margin = -std::numeric_limits<double>::infinity();
    const std::uint64_t corners = 1ULL << d;
    for (std::uint64_t mask = 0; mask < corners; ++mask) {
        Vector eps(d);
        for (int i = 0; i < d; ++i) eps(i) = (mask >> i) & 1ULL ? 1.0 : -1.0;
        const Vector z = w * eps;
        const Vector g = lu.solve(Vector((sum_w - z) / (2.0 * d)));
        const double violation = std::max(-g.minCoeff(), g.sum() - 1.0);
        check.simplex_margin = std::max(check.simplex_margin, violation);
    }

    if (check.zonotope_margin > kInclusionSlack)
        throw InclusionViolated("point " + std::to_string(check.worst_point) +
                                    " lies outside the zonotope by " +
                                    std::to_string(check.zonotope_margin),
                                check);
    if (check.simplex_margin > kInclusionSlack)
        throw InclusionViolated("zonotope vertex outside -2dS + sum w by " +
                                    std::to_string(check.simplex_margin),
                                check);
    return check;
}

}  // namespace steinitz
