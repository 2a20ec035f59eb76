#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "steinitz/errors.hpp"

namespace steinitz {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/**
 * Numerical thresholds shared by every routine. Passed explicitly; there is
 * no process-wide default state.
 */
struct Tolerance {
    double feas_eps = 1e-9;   ///< feasibility slack
    double sing_eps = 1e-12;  ///< pivot magnitude treated as zero
    double grad_eps = 1e-10;  ///< Newton stopping threshold

    /// Throws InvalidArgument unless all positive and feas_eps > sing_eps.
    void validate() const;
};

/// Determinant by partial-pivot elimination. Returns exactly 0.0 when a
/// pivot falls below `sing_eps` relative to the largest entry.
double det(const Matrix& m, double sing_eps = Tolerance{}.sing_eps);

/// Solves m·x = b. Throws SingularSystem when a pivot falls below sing_eps.
Vector solve(const Matrix& m, const Vector& b, double sing_eps = Tolerance{}.sing_eps);

/// Non-throwing variant of solve(); empty when the system is singular.
std::optional<Vector> try_solve(const Matrix& m, const Vector& b,
                                double sing_eps = Tolerance{}.sing_eps);

/// Coefficients t with x = sum t_i basis_i. `basis` must hold d independent
/// vectors of length d.
Vector gram_dual_coeffs(const std::vector<Vector>& basis, const Vector& x,
                        double sing_eps = Tolerance{}.sing_eps);

/// Stacks vectors as the columns of a matrix.
Matrix columns(const std::vector<Vector>& vs);

bool all_finite(const Vector& v);

// Compensated accumulation of vectors in insertion order.
class KahanVectorSum {
public:
    explicit KahanVectorSum(Eigen::Index dim)
        : sum_(Vector::Zero(dim)), comp_(Vector::Zero(dim)) {}

    void add(const Vector& v) {
        Vector y = v - comp_;
        Vector t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    const Vector& value() const { return sum_; }

private:
    Vector sum_;
    Vector comp_;
};

class KahanSum {
public:
    void add(double v) {
        double y = v - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Number of k-subsets of an n-set, saturating at `cap` + 1.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap);

/// Advances `idx` (sorted, size k, values < n) to the next k-subset in
/// lexicographic order. Returns false after the last subset.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);

}  // namespace steinitz
