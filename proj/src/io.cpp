#include "steinitz/io.hpp"

#include <fstream>

namespace steinitz::io {

InstanceFile parse_instance(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw GeometryError(Errc::InvalidArgument, "instance needs 'dim' and 'points'");
    if (!j.at("dim").is_number_integer())
        throw GeometryError(Errc::InvalidArgument, "'dim' must be an integer");
    InstanceFile out;
    out.cloud.dim = j.at("dim").get<int>();
    if (out.cloud.dim < 1) throw GeometryError(Errc::InvalidArgument, "'dim' must be positive");
    const json& pts = j.at("points");
    if (!pts.is_array()) throw GeometryError(Errc::InvalidArgument, "'points' must be an array");
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != static_cast<std::size_t>(out.cloud.dim))
            throw GeometryError(Errc::InvalidArgument, "every point needs exactly 'dim' coordinates");
        Vector v(out.cloud.dim);
        for (int i = 0; i < out.cloud.dim; ++i) {
            if (!p[static_cast<std::size_t>(i)].is_number())
                throw GeometryError(Errc::InvalidArgument, "coordinates must be numbers");
            v(i) = p[static_cast<std::size_t>(i)].get<double>();
        }
        out.cloud.points.push_back(std::move(v));
    }
    out.cloud.validate();
    if (j.contains("weights")) {
        const json& w = j.at("weights");
        if (!w.is_array() || w.size() != out.cloud.size())
            throw GeometryError(Errc::InvalidArgument, "'weights' must have one entry per point");
        out.weights = w.get<std::vector<double>>();
    }
    return out;
}

InstanceFile load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GeometryError(Errc::InvalidArgument, "cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw GeometryError(Errc::InvalidArgument, std::string("malformed instance file: ") + e.what());
    }
    return parse_instance(j);
}

json vector_json(const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

json cloud_json(const PointCloud& q) {
    json pts = json::array();
    for (const auto& p : q.points) pts.push_back(vector_json(p));
    return {{"dim", q.dim}, {"points", pts}};
}

json instance_json(const Instance& inst) {
    json j = cloud_json(inst.cloud);
    j["provenance"] = inst.provenance;
    j["seed"] = inst.seed ? json(*inst.seed) : json(nullptr);
    j["ball_certified"] = inst.ball_certified;
    return j;
}

json certificate_json(const SelectionCertificate& cert, const PointCloud& q) {
    json checks = json::array();
    for (const auto& c : cert.lemma_checks)
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"bound", c.bound},
                          {"relation", c.upper ? "<=" : ">="},
                          {"passed", c.passed}});
    // "dim" and "points" make the certificate a valid instance file.
    json j = cloud_json(q.subset(cert.selected_indices));
    j["selected_indices"] = cert.selected_indices;
    j["certified_radius"] = cert.certified_radius;
    j["guaranteed_radius"] = cert.guaranteed_radius;
    j["input_count"] = cert.input_count;
    j["pruned_count"] = cert.pruned_count;
    j["simplex_indices"] = cert.simplex_indices;
    j["caratheodory_indices"] = cert.caratheodory_indices;
    j["center"] = vector_json(cert.center);
    j["center_iterations"] = cert.center_iterations;
    j["simplex_restarts"] = cert.simplex_restarts;
    j["corollary_bound"] = cert.corollary_bound ? json(*cert.corollary_bound) : json(nullptr);
    j["lemma_checks"] = checks;
    j["verified"] = cert.all_checks_passed();
    return j;
}

json ball_json(const BallCertificate& b) {
    return {{"contained", b.contained},
            {"inscribed_radius", b.inscribed_radius},
            {"witness", vector_json(b.witness)},
            {"witness_support", b.witness_support}};
}

json center_json(const CenterResult& c, double zero_sum) {
    return {{"center", vector_json(c.center)},
            {"residual", c.residual},
            {"iterations", c.iterations},
            {"converged", c.converged},
            {"log_objective", c.log_objective},
            {"zero_sum_residual", zero_sum}};
}

json exhaustive_json(const ExhaustiveReport& r) {
    return {{"best_subset", r.best_subset},
            {"best_radius", r.best_radius},
            {"subsets_examined", r.subsets_examined}};
}

json macbeath_json(const MacbeathReport& r) {
    return {{"point", vector_json(r.point)},
            {"volume_at_point", r.volume_at_point},
            {"volume_stderr", r.volume_stderr},
            {"inclusion_factor", r.inclusion_factor},
            {"samples", r.samples},
            {"seed", r.seed},
            {"evaluations", r.evaluations},
            {"note", "Monte-Carlo exploration; not a proof"}};
}

}  // namespace steinitz::io
