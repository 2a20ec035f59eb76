#include <doctest.h>

#include <cmath>

#include "steinitz/macbeath.hpp"
#include "support.hpp"

using namespace steinitz;
using testsupport::cloud;
using testsupport::vec;

namespace {

const PointCloud kSquare = cloud(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
const PointCloud kTriangle = cloud(2, {{0, 0}, {1, 0}, {0, 1}});

PointCloud unit_cube() {
    PointCloud q;
    q.dim = 3;
    for (int a : {0, 1})
        for (int b : {0, 1})
            for (int c : {0, 1}) q.points.push_back(vec({double(a), double(b), double(c)}));
    return q;
}

}  // namespace

TEST_CASE("ConvexBody membership") {
    const ConvexBody body(kTriangle);
    CHECK(body.contains(vec({0.2, 0.2})));
    CHECK_FALSE(body.contains(vec({0.6, 0.6})));
    CHECK(body.box_volume() == doctest::Approx(1.0));
    CHECK(body.gauge(body.reference_point()) == 0.0);
    CHECK_THROWS_AS(ConvexBody(cloud(2, {{0, 0}, {1, 1}, {2, 2}})), GeometryError);
}

TEST_CASE("volume of the symmetric square") {
    const VolumeEstimate e = intersection_volume_mc(kSquare, vec({0, 0}), 100000, 1);
    CHECK(std::abs(e.volume - 4.0) <= 3.0 * e.stderr_ + 1e-12);
    const VolumeEstimate corner = intersection_volume_mc(kSquare, vec({1, 1}), 100000, 1);
    CHECK(corner.volume <= 3.0 * corner.stderr_ + 1e-12);
}

TEST_CASE("volume estimates match exact polygon clipping") {
    Xoshiro256 rng(51);
    const Vector centroid = vec({1.0 / 3.0, 1.0 / 3.0});
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const VolumeEstimate e = intersection_volume_mc(kTriangle, centroid, 100000, seed);
        const double exact = testsupport::exact_intersection_area(kTriangle, centroid);
        // hexagon with two thirds of the triangle area
        CHECK(exact == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(std::abs(e.volume - exact) <= 3.0 * e.stderr_);
    }
    for (int trial = 0; trial < 20; ++trial) {
        const PointCloud k = testsupport::random_shell(rng, 2, 4 + rng.index(6), 0.5, 1.5);
        const Vector x = vec({rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)});
        const VolumeEstimate e = intersection_volume_mc(k, x, 50000, static_cast<std::uint64_t>(trial));
        const double exact = testsupport::exact_intersection_area(k, x);
        CHECK(std::abs(e.volume - exact) <= 3.0 * e.stderr_ + 1e-12);
    }
}

TEST_CASE("inclusion factor") {
    const ConvexBody square(kSquare);
    CHECK(inclusion_factor(square, vec({0, 0})) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(inclusion_factor(square, vec({0.5, 0})) == doctest::Approx(3.0).epsilon(1e-5));
    const ConvexBody triangle(kTriangle);
    CHECK(inclusion_factor(triangle, vec({1.0 / 3.0, 1.0 / 3.0})) == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("symmetric bodies peak at the center") {
    const VolumeEstimate at_center = intersection_volume_mc(kSquare, vec({0, 0}), 100000, 2);
    for (const Vector& x : {vec({0.1, 0}), vec({0.05, -0.2}), vec({0.3, 0.3})}) {
        const VolumeEstimate e = intersection_volume_mc(kSquare, x, 100000, 2);
        CHECK(at_center.volume >= e.volume - 3.0 * e.stderr_);
    }

    MacbeathConfig config;
    config.samples = 100000;
    config.seed = 5;
    const MacbeathReport sq = find_macbeath_point(kSquare, config);
    CHECK(sq.point.norm() <= 1e-2);
    CHECK(std::abs(sq.inclusion_factor - 1.0) <= 1e-3);

    const MacbeathReport cube = find_macbeath_point(unit_cube(), config);
    CHECK((cube.point - vec({0.5, 0.5, 0.5})).norm() <= 1e-2);
    CHECK(std::abs(cube.inclusion_factor - 1.0) <= 1e-3);
    CHECK(cube.volume_at_point == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("triangle Macbeath point") {
    MacbeathConfig config;
    config.samples = 100000;
    const MacbeathReport r = find_macbeath_point(kTriangle, config);
    CHECK(r.inclusion_factor <= 2.05);
    CHECK(r.inclusion_factor >= 1.0);
    CHECK((r.point - vec({1.0 / 3.0, 1.0 / 3.0})).norm() <= 2e-2);
    CHECK(ConvexBody(kTriangle).contains(r.point));
    CHECK(r.samples == config.samples);
}

TEST_CASE("reports are reproducible") {
    MacbeathConfig config;
    config.samples = 20000;
    config.seed = 9;
    const PointCloud k = cloud(2, {{0, 0}, {2, 0}, {2, 1}, {0.3, 1.4}});
    const MacbeathReport a = find_macbeath_point(k, config);
    const MacbeathReport b = find_macbeath_point(k, config);
    CHECK(a.point == b.point);
    CHECK(a.inclusion_factor == b.inclusion_factor);
}
