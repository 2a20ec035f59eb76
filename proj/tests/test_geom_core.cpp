#include <doctest.h>

#include <cmath>

#include "steinitz/geom_core.hpp"
#include "support.hpp"

using namespace steinitz;
using testsupport::vec;

TEST_CASE("det of small matrices") {
    CHECK(det(Matrix::Identity(3, 3)) == doctest::Approx(1.0));
    Matrix m(2, 2);
    m << 1, 1, -1, 1;
    CHECK(det(m) == doctest::Approx(2.0));
}

TEST_CASE("det agrees with cofactor expansion") {
    Xoshiro256 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = testsupport::random_matrix(rng, 4);
        CHECK(std::abs(det(m) - testsupport::cofactor_det(m)) <= 1e-10);
    }
}

TEST_CASE("det with two equal rows is zero") {
    Xoshiro256 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = testsupport::random_matrix(rng, 4);
        m.row(3) = m.row(1);
        CHECK(std::abs(det(m)) <= 1e-12);
    }
}

TEST_CASE("det is multiplicative") {
    Xoshiro256 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = testsupport::random_matrix(rng, 4);
        const Matrix b = testsupport::random_matrix(rng, 4);
        const double lhs = det(a * b);
        const double rhs = det(a) * det(b);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("solve") {
    CHECK((solve(Matrix::Identity(3, 3), vec({1, 2, 3})) - vec({1, 2, 3})).norm() == 0.0);
    Matrix m(2, 2);
    m << 2, 0, 0, 4;
    CHECK((solve(m, vec({2, 4})) - vec({1, 1})).norm() <= 1e-15);

    Xoshiro256 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = testsupport::random_matrix(rng, 5) + 5.0 * Matrix::Identity(5, 5);
        Vector b(5);
        for (int i = 0; i < 5; ++i) b(i) = rng.uniform(-3, 3);
        const Vector x = solve(a, b);
        CHECK((a * x - b).lpNorm<Eigen::Infinity>() <= 1e-9 * (1.0 + b.lpNorm<Eigen::Infinity>()));
    }
}

TEST_CASE("solve rejects singular systems") {
    Matrix m(2, 2);
    m << 1, 2, 2, 4;
    CHECK_THROWS_AS(solve(m, vec({1, 1})), GeometryError);
    try {
        solve(m, vec({1, 1}));
    } catch (const GeometryError& e) {
        CHECK(e.code() == Errc::SingularSystem);
        CHECK(std::string(e.reason()) == "singular_system");
    }
    CHECK_FALSE(try_solve(m, vec({1, 1})).has_value());
}

TEST_CASE("gram_dual_coeffs") {
    const std::vector<Vector> std_basis{vec({1, 0}), vec({0, 1})};
    CHECK((gram_dual_coeffs(std_basis, vec({3, -2})) - vec({3, -2})).norm() <= 1e-15);
    const std::vector<Vector> basis{vec({1, 1}), vec({-1, 1})};
    CHECK((gram_dual_coeffs(basis, vec({0, 2})) - vec({1, 1})).norm() <= 1e-15);

    Xoshiro256 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vector> b;
        for (int i = 0; i < 4; ++i) b.push_back(testsupport::random_unit(rng, 4));
        Vector x(4);
        for (int i = 0; i < 4; ++i) x(i) = rng.uniform(-1, 1);
        const Vector t = gram_dual_coeffs(b, x);
        Vector back = Vector::Zero(4);
        for (int i = 0; i < 4; ++i) back += t(i) * b[i];
        CHECK((back - x).norm() <= 1e-9);
    }
    CHECK_THROWS_AS(gram_dual_coeffs({vec({1, 1}), vec({2, 2})}, vec({1, 0})), GeometryError);
}

TEST_CASE("tolerance validation") {
    CHECK_NOTHROW(Tolerance{}.validate());
    Tolerance bad;
    bad.feas_eps = 1e-13;
    CHECK_THROWS_AS(bad.validate(), GeometryError);
    bad = Tolerance{};
    bad.grad_eps = 0.0;
    CHECK_THROWS_AS(bad.validate(), GeometryError);
}

TEST_CASE("subset enumeration helpers") {
    CHECK(binomial_capped(10, 3, 1000) == 120);
    CHECK(binomial_capped(100, 50, 1000) > 1000);
    std::vector<std::size_t> idx{0, 1};
    int count = 1;
    while (next_combination(idx, 5)) ++count;
    CHECK(count == 10);
}
