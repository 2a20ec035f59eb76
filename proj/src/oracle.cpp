#include "steinitz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "steinitz/rng.hpp"

namespace steinitz {

Instance generate_grundbacher(int d) {
    if (d < 2) throw GeometryError(Errc::InvalidArgument, "Grundbacher example needs d >= 2");
    const double s = std::sqrt(static_cast<double>(d));
    Instance inst;
    inst.provenance = "grundbacher";
    inst.cloud.dim = d;
    auto& pts = inst.cloud.points;
    for (int i = 0; i + 1 < d; ++i) {
        pts.push_back(s * Vector::Unit(d, i));
        pts.push_back(-s * Vector::Unit(d, i));
    }
    pts.push_back(s * Vector::Unit(d, d - 1));
    Vector minus = Vector::Ones(d);
    Vector plus = -Vector::Ones(d);
    plus(d - 1) = 1.0;
    pts.push_back(-s * minus);
    pts.push_back(-s * plus);
    inst.ball_certified = true;
    return inst;
}

double grundbacher_bound(int d) {
    const double dd = d;
    return std::sqrt(dd / (dd * dd + dd - 1.0));
}

Instance generate_random_ball_instance(int d, std::size_t m, std::uint64_t seed, const Tolerance& tol) {
    if (d < 1) throw GeometryError(Errc::InvalidArgument, "dimension must be at least 1");
    if (m < static_cast<std::size_t>(d) + 1)
        throw GeometryError(Errc::InvalidArgument, "need m >= d + 1");
    Xoshiro256 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        PointCloud cloud;
        cloud.dim = d;
        for (std::size_t j = 0; j < m; ++j) {
            Vector v(d);
            for (int i = 0; i < d; ++i) v(i) = rng.normal();
            const double n = v.norm();
            if (!(n > 0.0)) {
                --j;
                continue;
            }
            cloud.points.push_back(v * (rng.uniform(1.0, 2.0) / n));
        }
        const double r = inscribed_radius_at_origin(cloud, tol);
        if (!(r > 1e-6)) continue;
        Instance inst;
        inst.cloud = cloud.scaled((1.0 + tol.feas_eps) / r);
        inst.provenance = "random-seeded";
        inst.seed = seed;
        inst.ball_certified = true;
        return inst;
    }
    throw GeometryError(Errc::RetryExhausted, "origin not interior after 100 draws");
}

namespace {

struct Best {
    std::size_t ordinal = 0;
    std::vector<std::size_t> subset;
    double radius = -1.0;
    std::size_t examined = 0;
};

Best scan(const PointCloud& q, std::size_t k, const Tolerance& tol, std::size_t stride, std::size_t offset) {
    Best best;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::size_t ordinal = 0;
    do {
        if (ordinal++ % stride != offset) continue;
        const double r = inscribed_radius_at_origin(q.subset(idx), tol);
        ++best.examined;
        if (r > best.radius) {
            best.radius = r;
            best.subset = idx;
            best.ordinal = ordinal - 1;
        }
    } while (next_combination(idx, q.size()));
    return best;
}

}  // namespace

ExhaustiveReport exhaustive_best_subset(const PointCloud& q, std::size_t k, const Tolerance& tol,
                                        std::size_t budget, int jobs) {
    q.validate();
    if (q.size() == 0) throw GeometryError(Errc::InvalidArgument, "empty cloud");
    k = std::min(k, q.size());
    if (k == 0) throw GeometryError(Errc::InvalidArgument, "subset size must be positive");
    if (binomial_capped(q.size(), k, budget) > budget)
        throw GeometryError(Errc::BudgetExceeded, "C(" + std::to_string(q.size()) + ", " +
                                                      std::to_string(k) + ") exceeds the budget");

    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<Best> parts(workers);
    if (workers == 1) {
        parts[0] = scan(q, k, tol, 1, 0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < workers; ++t)
            threads.emplace_back([&, t] { parts[t] = scan(q, k, tol, workers, t); });
        for (auto& th : threads) th.join();
    }

    ExhaustiveReport rep;
    rep.best_radius = -1.0;
    std::size_t best_ordinal = 0;
    for (const auto& p : parts) {
        rep.subsets_examined += p.examined;
        if (p.subset.empty()) continue;
        if (p.radius > rep.best_radius || (p.radius == rep.best_radius && p.ordinal < best_ordinal)) {
            rep.best_radius = p.radius;
            rep.best_subset = p.subset;
            best_ordinal = p.ordinal;
        }
    }
    return rep;
}

}  // namespace steinitz
