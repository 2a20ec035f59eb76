#include "steinitz/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace steinitz {

double guaranteed_radius(std::size_t m, int d) {
    return 1.0 / (2.0 * (static_cast<double>(m) + d) + 1.0);
}

bool SelectionCertificate::all_checks_passed() const {
    return std::all_of(lemma_checks.begin(), lemma_checks.end(),
                       [](const CheckRecord& c) { return c.passed; });
}

std::vector<std::string> SelectionCertificate::failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : lemma_checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

PrunedCloud prune_to_extreme(const PointCloud& q, const Tolerance& tol) {
    q.validate();
    auto [unique, first_index] = q.dedup(1e-12);
    std::vector<std::size_t> alive(unique.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});

    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<std::size_t> others;
        for (auto j : alive)
            if (j != i) others.push_back(j);
        if (others.empty()) continue;
        const HullMembership h = initial_convex_combination(unique.subset(others), unique.points[i], tol);
        if (h.feasible) alive.erase(std::find(alive.begin(), alive.end(), i));
    }

    PrunedCloud out;
    out.cloud = unique.subset(alive);
    for (auto j : alive) out.original_index.push_back(first_index[j]);
    return out;
}

namespace {

void record(SelectionCertificate& cert, std::string name, double value, double bound, bool upper) {
    const bool ok = std::isfinite(value) && (upper ? value <= bound : value >= bound);
    cert.lemma_checks.push_back({std::move(name), value, bound, upper, ok});
}

SimplexResult locally_maximal_simplex(const PointCloud& l, std::uint64_t seed, const Tolerance& tol,
                                      const SelectionOptions& opts, Lemma23Check& check) {
    int restarts = std::max(1, opts.restarts);
    for (int attempt = 0;; ++attempt) {
        SimplexResult s = max_volume_simplex_at_origin(l, restarts, seed + static_cast<std::uint64_t>(attempt), tol);
        try {
            check = verify_lemma23_inclusions(l, s, tol);
            return s;
        } catch (const InclusionViolated&) {
            if (attempt >= opts.max_escalations) throw;
            restarts *= 2;
        }
    }
}

}  // namespace

SelectionCertificate select_steinitz(const PointCloud& q, const Tolerance& tol, std::uint64_t seed,
                                     const SelectionOptions& opts) {
    tol.validate();
    q.validate();
    const int d = q.dim;

    // (1) extreme points only
    const PrunedCloud pruned = prune_to_extreme(q, tol);
    const std::size_t m = pruned.cloud.size();

    SelectionCertificate cert;
    cert.dim = d;
    cert.input_count = q.size();
    cert.pruned_count = m;
    cert.guaranteed_radius = guaranteed_radius(m, d);

    const BallCertificate ball = certify_ball_in_hull(pruned.cloud, 1.0, tol, opts.subset_budget, opts.jobs);
    if (!ball.contained) {
        std::ostringstream msg;
        msg << "convex hull does not contain the unit ball: inscribed radius " << ball.inscribed_radius
            << ", support " << ball.witness_support << " along witness ["
            << ball.witness.transpose() << "]";
        throw GeometryError(Errc::BallNotContained, msg.str());
    }
    if (m <= static_cast<std::size_t>(d))
        throw GeometryError(Errc::TooFewPoints, "need at least d + 1 extreme points");
    record(cert, "input_inscribed_radius", ball.inscribed_radius, 1.0 - tol.feas_eps, false);

    // (2)-(3) polar center of P = Q°
    const WeightedSystem ws = WeightedSystem::uniform(polar_of_cloud(pruned.cloud));
    CenterOptions copts;
    copts.max_iter = opts.center_max_iter;
    copts.assume_bounded = true;
    const CenterResult center = solve_center(ws, tol, copts);
    cert.center = center.center;
    cert.center_iterations = center.iterations;
    record(cert, "center_converged", center.converged ? 1.0 : 0.0, 1.0, false);
    record(cert, "center_in_unit_ball", center.center.norm(), 1.0 + tol.feas_eps, true);

    // (4) images in the recentred polar
    PointCloud l;
    l.dim = d;
    for (const auto& v : pruned.cloud.points) l.points.push_back(vertex_correspondence(v, center.center, tol));
    record(cert, "zero_sum_residual", verify_zero_sum(ws, center.center, tol), 1e-7, true);
    record(cert, "atlantis_half_ball", inscribed_radius_at_origin(l, tol, opts.subset_budget, opts.jobs),
           0.5 - 1e-8, false);

    // (5) locally maximal simplex and its inclusions
    Lemma23Check incl;
    const SimplexResult simplex = locally_maximal_simplex(l, seed, tol, opts, incl);
    cert.simplex_restarts = simplex.restarts_used;
    record(cert, "zonotope_margin", incl.zonotope_margin, kInclusionSlack, true);
    record(cert, "simplex_inclusion_margin", incl.simplex_margin, kInclusionSlack, true);

    // (6) centroid of the other images and the simplex barycenter
    const std::set<std::size_t> in_simplex(simplex.indices.begin(), simplex.indices.end());
    KahanVectorSum simplex_sum(d);
    for (auto i : simplex.indices) simplex_sum.add(l.points[i]);
    const double rest = static_cast<double>(m) - d;
    const Vector p = -simplex_sum.value() / rest;
    const Vector b = simplex_sum.value() / static_cast<double>(d);

    std::vector<std::size_t> others;
    KahanVectorSum others_sum(d);
    for (std::size_t i = 0; i < m; ++i) {
        if (in_simplex.count(i)) continue;
        others.push_back(i);
        others_sum.add(l.points[i]);
    }
    const Vector centroid = others_sum.value() / rest;
    record(cert, "centroid_identity", (p - centroid).norm(), 1e-9, true);

    // (7) anchored reduction of the centroid over the other images; the
    // arithmetic mean lies in their hull exactly, p only up to the residual.
    const CaratheodoryResult car = anchored_caratheodory(l.subset(others), centroid, b, tol);
    record(cert, "caratheodory_support", static_cast<double>(car.indices.size()), d, true);
    record(cert, "caratheodory_residual", car.residual, 1e-8, true);
    record(cert, "caratheodory_step_drift", car.max_step_drift, 1e-9, true);

    // (8) union, mapped back to the caller's indices
    std::set<std::size_t> chosen_pruned(simplex.indices.begin(), simplex.indices.end());
    for (auto k : car.indices) chosen_pruned.insert(others[k]);
    std::vector<std::size_t> chosen(chosen_pruned.begin(), chosen_pruned.end());

    PointCloud w_sel = l.subset(chosen);
    record(cert, "atlantis_selected_radius",
           inscribed_radius_at_origin(w_sel, tol, opts.subset_budget, opts.jobs),
           1.0 / (2.0 * (static_cast<double>(m) + d)) - 1e-8, false);

    std::set<std::size_t> selected;
    for (auto i : chosen) selected.insert(pruned.original_index[i]);
    cert.selected_indices.assign(selected.begin(), selected.end());
    for (auto i : simplex.indices) cert.simplex_indices.push_back(pruned.original_index[i]);
    for (auto k : car.indices) cert.caratheodory_indices.push_back(pruned.original_index[others[k]]);
    record(cert, "selection_size", static_cast<double>(cert.selected_indices.size()), 2.0 * d, true);

    // (9) independent certification
    cert.certified_radius =
        inscribed_radius_at_origin(q.subset(cert.selected_indices), tol, opts.subset_budget, opts.jobs);
    record(cert, "certified_radius", cert.certified_radius, cert.guaranteed_radius - 1e-8, false);
    return cert;
}

SelectionCertificate select_corollary12(const PointCloud& q, double alpha, double lambda,
                                        const Tolerance& tol, std::uint64_t seed,
                                        const SelectionOptions& opts) {
    if (!(alpha > 1.0)) throw GeometryError(Errc::InvalidArgument, "alpha must exceed 1");
    if (!(lambda > 0.0)) throw GeometryError(Errc::InvalidArgument, "lambda must be positive");
    if (static_cast<double>(q.size()) > alpha * q.dim + 1e-9)
        throw GeometryError(Errc::InvalidArgument, "cloud has more than alpha·d points");

    SelectionCertificate cert = select_steinitz(q.scaled(1.0 / lambda), tol, seed, opts);
    cert.guaranteed_radius *= lambda;
    cert.certified_radius =
        inscribed_radius_at_origin(q.subset(cert.selected_indices), tol, opts.subset_budget, opts.jobs);
    cert.corollary_bound = lambda / (5.0 * alpha * q.dim);
    record(cert, "corollary12_radius", cert.certified_radius, *cert.corollary_bound - 1e-8, false);
    return cert;
}

SelectionCertificate select_corollary14(const PointCloud& q, const Tolerance& tol, std::uint64_t seed,
                                        const SelectionOptions& opts) {
    tol.validate();
    q.validate();
    const int d = q.dim;
    const BallCertificate ball = certify_ball_in_hull(q, 1.0, tol, opts.subset_budget, opts.jobs);
    if (!ball.contained)
        throw GeometryError(Errc::BallNotContained, "convex hull does not contain the unit ball");

    // Stage 1: each ±e_i lies in conv{0, v_1, ..., v_d} for some v_j in Q.
    std::set<std::size_t> stage1;
    const Vector origin = Vector::Zero(d);
    for (int i = 0; i < d; ++i) {
        for (double sgn : {1.0, -1.0}) {
            const Vector e = sgn * Vector::Unit(d, i);
            const CaratheodoryResult r = anchored_caratheodory(q, e, origin, tol);
            stage1.insert(r.indices.begin(), r.indices.end());
        }
    }
    const std::vector<std::size_t> union_idx(stage1.begin(), stage1.end());
    const PointCloud reduced = q.subset(union_idx);
    const double root_d = std::sqrt(static_cast<double>(d));
    const double union_radius = inscribed_radius_at_origin(reduced, tol, opts.subset_budget, opts.jobs);

    // Stage 2: the reduced set scaled by √d contains B.
    SelectionCertificate cert = select_steinitz(reduced.scaled(root_d), tol, seed, opts);
    record(cert, "stage1_size", static_cast<double>(union_idx.size()), 2.0 * d * d, true);
    record(cert, "stage1_cross_polytope_ball", union_radius, 1.0 / root_d - 1e-8, false);

    for (auto& i : cert.selected_indices) i = union_idx[i];
    for (auto& i : cert.simplex_indices) i = union_idx[i];
    for (auto& i : cert.caratheodory_indices) i = union_idx[i];
    cert.input_count = q.size();
    cert.guaranteed_radius /= root_d;
    cert.certified_radius =
        inscribed_radius_at_origin(q.subset(cert.selected_indices), tol, opts.subset_budget, opts.jobs);
    cert.corollary_bound = std::pow(static_cast<double>(d), -2.5) / 7.0;
    record(cert, "corollary14_radius", cert.certified_radius, *cert.corollary_bound - 1e-8, false);
    return cert;
}

}  // namespace steinitz
