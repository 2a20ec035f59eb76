#include "steinitz/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "steinitz/io.hpp"

namespace steinitz::cli {

using io::json;

namespace {

const std::map<std::string, Command> kCommands{
    {"select", Command::Select},           {"verify", Command::Verify},
    {"center", Command::Center},           {"exhaustive", Command::Exhaustive},
    {"grundbacher", Command::Grundbacher}, {"corollary14", Command::Corollary14},
    {"macbeath", Command::Macbeath},       {"bench", Command::Bench},
};

std::string command_name(Command c) {
    for (const auto& [name, value] : kCommands)
        if (value == c) return name;
    return "unknown";
}

json config_json(const RunConfig& c) {
    json j = {{"command", command_name(c.command)},
              {"seed", c.seed},
              {"feas_eps", c.tol.feas_eps},
              {"grad_eps", c.tol.grad_eps},
              {"sing_eps", c.tol.sing_eps}};
    if (c.input_path) j["input"] = *c.input_path;
    if (c.dim) j["dim"] = *c.dim;
    if (c.m) j["m"] = *c.m;
    if (c.k) j["k"] = *c.k;
    switch (c.command) {
        case Command::Verify: j["radius"] = c.radius; break;
        case Command::Grundbacher: j["exhaustive"] = c.exhaustive; break;
        case Command::Macbeath: j["samples"] = c.samples; break;
        case Command::Bench: j["count"] = c.count; break;
        case Command::Select:
            if (c.alpha) {
                j["alpha"] = *c.alpha;
                j["lambda"] = c.lambda;
            }
            break;
        default: break;
    }
    return j;
}

void emit(const RunConfig& c, json record, std::ostream& out) {
    record["tool_version"] = kVersion;
    record["config"] = config_json(c);
    const std::string text = record.dump(2) + "\n";
    if (c.output_path) {
        std::ofstream f(*c.output_path, std::ios::binary);
        if (!f) throw GeometryError(Errc::InvalidArgument, "cannot write " + *c.output_path);
        f << text;
    } else {
        out << text;
    }
}

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

io::InstanceFile require_input(const RunConfig& c) {
    if (!c.input_path) throw UsageError("--input is required for " + command_name(c.command));
    return io::load_instance(*c.input_path);
}

int exit_for(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return kUsage;
        case Errc::BallNotContained:
        case Errc::TooFewPoints:
        case Errc::Unbounded:
        case Errc::UnboundedPolytope:
        case Errc::TargetNotInHull:
        case Errc::DegenerateCloud:
        case Errc::BudgetExceeded:
        case Errc::DimensionTooLarge:
        case Errc::RetryExhausted:
            return kCertifiedFailure;
        default: return kInternalFailure;
    }
}

PointCloud select_input(const RunConfig& c) {
    if (c.input_path) return require_input(c).cloud;
    if (c.dim && c.m)
        return generate_random_ball_instance(*c.dim, static_cast<std::size_t>(*c.m), c.seed, c.tol).cloud;
    throw UsageError("select needs --input or both --dim and --m");
}

SelectionOptions selection_options(const RunConfig& c) {
    SelectionOptions o;
    o.jobs = c.jobs;
    return o;
}

int run_select(const RunConfig& c, std::ostream& out) {
    const PointCloud q = select_input(c);
    const SelectionCertificate cert =
        c.alpha ? select_corollary12(q, *c.alpha, c.lambda, c.tol, c.seed, selection_options(c))
                : select_steinitz(q, c.tol, c.seed, selection_options(c));
    json rec = io::certificate_json(cert, q);
    const bool ok = cert.all_checks_passed();
    rec["status"] = ok ? "ok" : "verification_failed";
    if (!ok) rec["failed_checks"] = cert.failed_checks();
    emit(c, rec, out);
    return ok ? kOk : kInternalFailure;
}

int run_corollary14(const RunConfig& c, std::ostream& out) {
    const PointCloud q = require_input(c).cloud;
    const SelectionCertificate cert = select_corollary14(q, c.tol, c.seed, selection_options(c));
    json rec = io::certificate_json(cert, q);
    const bool ok = cert.all_checks_passed();
    rec["status"] = ok ? "ok" : "verification_failed";
    if (!ok) rec["failed_checks"] = cert.failed_checks();
    emit(c, rec, out);
    return ok ? kOk : kInternalFailure;
}

int run_verify(const RunConfig& c, std::ostream& out) {
    const PointCloud q = require_input(c).cloud;
    if (!(c.radius > 0.0)) throw UsageError("--radius must be positive");
    const BallCertificate b = certify_ball_in_hull(q, c.radius, c.tol, kDefaultSubsetBudget, c.jobs);
    json rec = io::ball_json(b);
    rec["radius"] = c.radius;
    rec["status"] = b.contained ? "ok" : "ball_not_contained";
    if (!b.contained) rec["reason"] = "ball_not_contained";
    emit(c, rec, out);
    return b.contained ? kOk : kCertifiedFailure;
}

int run_center(const RunConfig& c, std::ostream& out) {
    const io::InstanceFile in = require_input(c);
    WeightedSystem ws = WeightedSystem::uniform(polar_of_cloud(in.cloud));
    if (in.weights) ws.weights = *in.weights;
    const CenterResult res = solve_center(ws, c.tol);
    const double zero_sum = verify_zero_sum(ws, res.center, c.tol);
    json rec = io::center_json(res, zero_sum);
    const bool ok = res.converged && zero_sum <= 1e-7;
    rec["status"] = ok ? "ok" : "verification_failed";
    emit(c, rec, out);
    return ok ? kOk : kInternalFailure;
}

int run_exhaustive(const RunConfig& c, std::ostream& out) {
    const PointCloud q = require_input(c).cloud;
    const std::size_t k = c.k ? static_cast<std::size_t>(*c.k) : static_cast<std::size_t>(2 * q.dim);
    json rec = io::exhaustive_json(exhaustive_best_subset(q, k, c.tol, kDefaultExhaustiveBudget, c.jobs));
    rec["status"] = "ok";
    emit(c, rec, out);
    return kOk;
}

int run_grundbacher(const RunConfig& c, std::ostream& out) {
    if (!c.dim) throw UsageError("grundbacher needs --dim");
    const Instance inst = generate_grundbacher(*c.dim);
    json rec = io::instance_json(inst);
    rec["bound"] = grundbacher_bound(*c.dim);
    if (c.exhaustive) {
        const std::size_t k = c.k ? static_cast<std::size_t>(*c.k) : static_cast<std::size_t>(2 * *c.dim);
        rec["exhaustive"] = io::exhaustive_json(
            exhaustive_best_subset(inst.cloud, k, c.tol, kDefaultExhaustiveBudget, c.jobs));
        rec["full_set_inscribed_radius"] = inscribed_radius_at_origin(inst.cloud, c.tol);
    }
    rec["status"] = "ok";
    emit(c, rec, out);
    return kOk;
}

int run_macbeath(const RunConfig& c, std::ostream& out) {
    const PointCloud k = require_input(c).cloud;
    MacbeathConfig mc;
    mc.samples = c.samples;
    mc.seed = c.seed;
    json rec = io::macbeath_json(find_macbeath_point(k, mc, c.tol));
    rec["status"] = "ok";
    emit(c, rec, out);
    return kOk;
}

int run_bench(const RunConfig& c, std::ostream& out) {
    if (!c.dim || !c.m) throw UsageError("bench needs --dim and --m");
    json runs = json::array();
    bool all_ok = true;
    for (int i = 0; i < c.count; ++i) {
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
        const auto t0 = std::chrono::steady_clock::now();
        const Instance inst = generate_random_ball_instance(*c.dim, static_cast<std::size_t>(*c.m), seed, c.tol);
        const SelectionCertificate cert = select_steinitz(inst.cloud, c.tol, seed, selection_options(c));
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        all_ok = all_ok && cert.all_checks_passed();
        runs.push_back({{"seed", seed},
                        {"selected", cert.selected_indices.size()},
                        {"pruned_count", cert.pruned_count},
                        {"certified_radius", cert.certified_radius},
                        {"guaranteed_radius", cert.guaranteed_radius},
                        {"verified", cert.all_checks_passed()},
                        {"elapsed_ms", ms}});
    }
    emit(c, {{"runs", runs}, {"status", all_ok ? "ok" : "verification_failed"}}, out);
    return all_ok ? kOk : kInternalFailure;
}

}  // namespace

std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                               int& exit_code) {
    RunConfig cfg;
    CLI::App app{"Quantitative Steinitz point selection with certified inscribed radii"};
    app.set_version_flag("--version", std::string(kVersion));
    std::string command;
    app.add_option("command", command, "select | verify | center | exhaustive | grundbacher | "
                                       "corollary14 | macbeath | bench")
        ->required()
        ->check(CLI::IsMember({"select", "verify", "center", "exhaustive", "grundbacher", "corollary14",
                               "macbeath", "bench"}));
    app.add_option("--input", cfg.input_path, "instance file {\"dim\", \"points\"}");
    app.add_option("--output", cfg.output_path, "write the result record here instead of stdout");
    app.add_option("--dim", cfg.dim, "ambient dimension")->check(CLI::PositiveNumber);
    app.add_option("--m", cfg.m, "number of random points")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for every randomized step (default 0)");
    app.add_option("--radius", cfg.radius, "ball radius for verify");
    app.add_option("--k", cfg.k, "subset size for exhaustive search (default 2d)")->check(CLI::PositiveNumber);
    app.add_flag("--exhaustive", cfg.exhaustive, "run the exhaustive best-subset oracle");
    app.add_option("--alpha", cfg.alpha, "select: corollary with at most alpha·d points");
    app.add_option("--lambda", cfg.lambda, "select: radius of the ball contained in the input hull");
    app.add_option("--samples", cfg.samples, "Monte-Carlo samples for macbeath");
    app.add_option("--count", cfg.count, "instances for bench")->check(CLI::PositiveNumber);
    app.add_option("--feas-eps", cfg.tol.feas_eps, "feasibility slack");
    app.add_option("--grad-eps", cfg.tol.grad_eps, "Newton stopping threshold");
    app.add_option("--jobs", cfg.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
        return std::nullopt;
    }
    try {
        cfg.tol.validate();
    } catch (const GeometryError& e) {
        err << e.what() << "\n";
        exit_code = kUsage;
        return std::nullopt;
    }
    cfg.command = kCommands.at(command);
    exit_code = kOk;
    return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    auto fail = [&](int code, std::string_view reason, const std::string& message, json extra = json::object()) {
        json rec = std::move(extra);
        rec["status"] = "error";
        rec["reason"] = reason;
        rec["message"] = message;
        err << "error (" << reason << "): " << message << "\n";
        try {
            emit(config, rec, out);
        } catch (const std::exception& e) {
            err << e.what() << "\n";
        }
        return code;
    };

    try {
        switch (config.command) {
            case Command::Select: return run_select(config, out);
            case Command::Verify: return run_verify(config, out);
            case Command::Center: return run_center(config, out);
            case Command::Exhaustive: return run_exhaustive(config, out);
            case Command::Grundbacher: return run_grundbacher(config, out);
            case Command::Corollary14: return run_corollary14(config, out);
            case Command::Macbeath: return run_macbeath(config, out);
            case Command::Bench: return run_bench(config, out);
        }
        return kUsage;
    } catch (const UsageError& e) {
        return fail(kUsage, "usage", e.what());
    } catch (const GeometryError& e) {
        json extra = json::object();
        if (e.code() == Errc::BallNotContained && config.input_path) {
            // Attach the separating direction for the caller's cloud.
            try {
                const PointCloud q = io::load_instance(*config.input_path).cloud;
                extra["witness"] = io::ball_json(certify_ball_in_hull(q, 1.0, config.tol));
            } catch (const std::exception&) {
            }
        }
        return fail(exit_for(e.code()), e.reason(), e.what(), extra);
    } catch (const std::exception& e) {
        return fail(kInternalFailure, "internal", e.what());
    }
}

}  // namespace steinitz::cli
