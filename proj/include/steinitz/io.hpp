#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "steinitz/macbeath.hpp"
#include "steinitz/oracle.hpp"
#include "steinitz/polar_center.hpp"
#include "steinitz/selection.hpp"

namespace steinitz::io {

using nlohmann::json;

/// Instance record: {"dim": d, "points": [[x_1, ..., x_d], ...]} with an
/// optional positive "weights" array (one per point).
struct InstanceFile {
    PointCloud cloud;
    std::optional<std::vector<double>> weights;
};

InstanceFile parse_instance(const json& j);
InstanceFile load_instance(const std::filesystem::path& path);

json vector_json(const Vector& v);
json cloud_json(const PointCloud& q);
json instance_json(const Instance& inst);
json certificate_json(const SelectionCertificate& cert, const PointCloud& q);
json ball_json(const BallCertificate& b);
json center_json(const CenterResult& c, double zero_sum);
json exhaustive_json(const ExhaustiveReport& r);
json macbeath_json(const MacbeathReport& r);

}  // namespace steinitz::io
