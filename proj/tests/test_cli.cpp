#include <doctest.h>

#include <cmath>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "steinitz/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace steinitz;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json record() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "steinitz");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    const auto cfg = cli::parse(static_cast<int>(argv.size()), argv.data(), out, err, code);
    if (cfg) code = cli::run(*cfg, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("steinitz_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content = "") const {
        const fs::path p = path_ / name;
        if (!content.empty()) std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path path_;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const char* kSquare = R"({"dim": 2, "points": [[1, 1], [1, -1], [-1, 1], [-1, -1]]})";

}  // namespace

TEST_CASE("verify on the square") {
    TempDir tmp;
    const std::string in = tmp.file("square.json", kSquare);
    const Outcome ok = invoke({"verify", "--input", in, "--radius", "1.0"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.record()["contained"] == true);

    const Outcome fail = invoke({"verify", "--input", in, "--radius", "1.01"});
    CHECK(fail.code == cli::kCertifiedFailure);
    const json r = fail.record();
    CHECK(r["reason"] == "ball_not_contained");
    CHECK(r["witness"].size() == 2);
    CHECK(r["witness_support"].get<double>() < 1.01);
}

TEST_CASE("select on the Grundbacher set and re-verify from the certificate") {
    TempDir tmp;
    const Outcome g = invoke({"grundbacher", "--dim", "2"});
    REQUIRE(g.code == cli::kOk);
    json inst = g.record();
    const std::string in = tmp.file("g2.json", json{{"dim", inst["dim"]}, {"points", inst["points"]}}.dump());

    const std::string cert_path = tmp.file("cert.json");
    const Outcome s = invoke({"select", "--input", in, "--output", cert_path});
    CHECK(s.code == cli::kOk);
    const json cert = json::parse(read_file(cert_path));
    CHECK(cert["status"] == "ok");
    CHECK(cert["selected_indices"].size() <= 4);
    CHECK(cert["verified"] == true);
    CHECK(cert["tool_version"] == cli::kVersion);
    CHECK(cert["config"]["command"] == "select");

    std::ostringstream radius;
    radius.precision(17);
    radius << cert["guaranteed_radius"].get<double>();
    const Outcome v = invoke({"verify", "--input", cert_path, "--radius", radius.str()});
    CHECK(v.code == cli::kOk);
}

TEST_CASE("identical runs give byte-identical output") {
    const Outcome a = invoke({"select", "--dim", "3", "--m", "12", "--seed", "4"});
    const Outcome b = invoke({"select", "--dim", "3", "--m", "12", "--seed", "4"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    const Outcome c = invoke({"select", "--dim", "3", "--m", "12", "--seed", "5"});
    CHECK(c.out != a.out);
}

TEST_CASE("grundbacher with exhaustive search") {
    const Outcome r = invoke({"grundbacher", "--dim", "3", "--exhaustive"});
    CHECK(r.code == cli::kOk);
    const json j = r.record();
    CHECK(std::abs(j["exhaustive"]["best_radius"].get<double>() - std::sqrt(3.0 / 11.0)) <= 1e-9);
    CHECK(j["full_set_inscribed_radius"].get<double>() >= 1.0 - 1e-9);
}

TEST_CASE("select rejects a cloud without the unit ball") {
    TempDir tmp;
    const std::string in = tmp.file("cp.json", R"({"dim": 2, "points": [[1, 0], [-1, 0], [0, 1], [0, -1]]})");
    const Outcome r = invoke({"select", "--input", in});
    CHECK(r.code == cli::kCertifiedFailure);
    const json j = r.record();
    CHECK(j["status"] == "error");
    CHECK(j["reason"] == "ball_not_contained");
    CHECK(j["witness"]["contained"] == false);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kUsage);
    CHECK(invoke({"verify"}).code == cli::kUsage);
    CHECK(invoke({"select", "--dim", "3"}).code == cli::kUsage);
    CHECK(invoke({"select", "--dim", "3", "--m", "8", "--feas-eps", "-1"}).code == cli::kUsage);

    TempDir tmp;
    const std::string bad = tmp.file("bad.json", R"({"dim": 2, "points": [[1, 0, 3]]})");
    const Outcome r = invoke({"verify", "--input", bad});
    CHECK(r.code == cli::kUsage);
    CHECK(r.record()["reason"] == "invalid_argument");

    const Outcome v = invoke({"--version"});
    CHECK(v.code == cli::kOk);
    CHECK(v.out.find(cli::kVersion) != std::string::npos);
}

TEST_CASE("center, exhaustive, corollary14 and macbeath commands") {
    TempDir tmp;
    const std::string sq = tmp.file("square.json", kSquare);

    const Outcome c = invoke({"center", "--input", sq});
    CHECK(c.code == cli::kOk);
    CHECK(c.record()["converged"] == true);
    CHECK(c.record()["zero_sum_residual"].get<double>() <= 1e-7);

    const std::string weighted =
        tmp.file("w.json", R"({"dim": 2, "points": [[1, 0], [0, 1], [-1, -1]], "weights": [2, 1, 1]})");
    const json wc = invoke({"center", "--input", weighted}).record();
    CHECK(std::abs(wc["center"][0].get<double>() + 0.5) <= 1e-9);
    CHECK(std::abs(wc["center"][1].get<double>() - 0.25) <= 1e-9);

    const Outcome e = invoke({"exhaustive", "--input", sq, "--k", "3"});
    CHECK(e.code == cli::kOk);
    CHECK(e.record()["subsets_examined"] == 4);

    const std::string scaled = tmp.file("big.json", R"({"dim": 2, "points": [[2, 0], [-2, 0], [0, 2], [0, -2], [1.5, 1.5]]})");
    const Outcome k = invoke({"corollary14", "--input", scaled, "--seed", "1"});
    CHECK(k.code == cli::kOk);
    CHECK(k.record()["verified"] == true);

    const Outcome m = invoke({"macbeath", "--input", sq, "--samples", "20000"});
    CHECK(m.code == cli::kOk);
    CHECK(std::abs(m.record()["inclusion_factor"].get<double>() - 1.0) <= 1e-2);
}

TEST_CASE("bench") {
    const Outcome b = invoke({"bench", "--dim", "2", "--m", "6", "--count", "3"});
    CHECK(b.code == cli::kOk);
    CHECK(b.record()["runs"].size() == 3);
}
