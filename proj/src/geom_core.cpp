#include "steinitz/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steinitz {

void Tolerance::validate() const {
    if (!(feas_eps > 0.0 && sing_eps > 0.0 && grad_eps > 0.0))
        throw GeometryError(Errc::InvalidArgument, "tolerances must be strictly positive");
    if (!(feas_eps > sing_eps))
        throw GeometryError(Errc::InvalidArgument, "feas_eps must exceed sing_eps");
}

namespace {

void require_square(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw GeometryError(Errc::InvalidArgument, "matrix must be square and non-empty");
}

// Smallest pivot of the partial-pivot factorization relative to the
// largest entry of the input.
double relative_min_pivot(const Eigen::PartialPivLU<Matrix>& lu, const Matrix& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return lu.matrixLU().diagonal().cwiseAbs().minCoeff() / scale;
}

}  // namespace

double det(const Matrix& m, double sing_eps) {
    require_square(m);
    Eigen::PartialPivLU<Matrix> lu(m);
    if (relative_min_pivot(lu, m) <= sing_eps) return 0.0;
    return lu.determinant();
}

Vector solve(const Matrix& m, const Vector& b, double sing_eps) {
    require_square(m);
    if (b.size() != m.rows())
        throw GeometryError(Errc::InvalidArgument, "right-hand side has wrong length");
    Eigen::PartialPivLU<Matrix> lu(m);
    if (relative_min_pivot(lu, m) <= sing_eps)
        throw GeometryError(Errc::SingularSystem, "pivot below singularity threshold");
    return lu.solve(b);
}

std::optional<Vector> try_solve(const Matrix& m, const Vector& b, double sing_eps) {
    require_square(m);
    Eigen::PartialPivLU<Matrix> lu(m);
    if (relative_min_pivot(lu, m) <= sing_eps) return std::nullopt;
    return Vector(lu.solve(b));
}

Matrix columns(const std::vector<Vector>& vs) {
    if (vs.empty()) return Matrix();
    Matrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
    return m;
}

Vector gram_dual_coeffs(const std::vector<Vector>& basis, const Vector& x, double sing_eps) {
    if (static_cast<Eigen::Index>(basis.size()) != x.size())
        throw GeometryError(Errc::InvalidArgument,
                            "basis must contain exactly d vectors, got " + std::to_string(basis.size()));
    return solve(columns(basis), x, sing_eps);
}

bool all_finite(const Vector& v) { return v.allFinite(); }

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Exact while the running value stays below cap; C(n, i) is integral at each step.
    long double value = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) {
        value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (value > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::size_t>(std::llround(value));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace steinitz
