// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "jcas");
    std::vector<char*> argv;
    for (auto& a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = jcas::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("jcas_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream s(text);
    for (std::string line; std::getline(s, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> fields(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream s(line);
    while (std::getline(s, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

const char* kDetectionsHeader = "time_s,l1,l2,l_mean,l_delta,r_eq15_m,v_eq15_mps,r_eq16_m,v_eq16_mps,pair_mag_db,"
                                "track_id,resolved,r_m,v_mps";

} // namespace

TEST_CASE("simulate fig4 writes the expected files")
{
    const auto dir = scratch("fig4");
    const auto r = invoke({"simulate", "--scene", "fig4", "--out", dir.string()});
    REQUIRE(r.code == 0);
    for (const char* f : {"image_0.csv", "image_0.2.csv", "image_0.6.csv", "detections.csv", "tracks.csv"}) {
        CHECK(fs::exists(dir / f));
    }
    const auto img = lines(slurp(dir / "image_0.2.csv"));
    CHECK(img.front() == "bin,magnitude_db");
    CHECK(img.size() == 1 + 241);
    const auto det = lines(slurp(dir / "detections.csv"));
    CHECK(det.front() == kDetectionsHeader);
    for (std::size_t i = 1; i < det.size(); ++i) {
        const auto f = fields(det[i]);
        CHECK(f.size() == 14);
        CHECK((f[11] == "a" || f[11] == "b" || f[11] == "undecided"));
    }
    CHECK(lines(slurp(dir / "tracks.csv")).front() ==
          "track_id,first_time_s,last_time_s,frames,score_a,score_b,resolved,r_m,v_mps");
}

TEST_CASE("simulate is deterministic")
{
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    for (const auto& d : {a, b}) {
        REQUIRE(invoke({"simulate", "--scene", "fig4", "--window", "adaptive", "--snr-db", "20", "--seed", "9",
                        "--estimator", "both", "--out", d.string()})
                    .code == 0);
    }
    std::size_t compared = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        const auto other = b / e.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(e.path()) == slurp(other));
        ++compared;
    }
    CHECK(compared >= 10);
    CHECK(fs::exists(a / "image_0_hamming.csv"));
    CHECK(fs::exists(a / "rdmap_0.6.csv"));
    CHECK(lines(slurp(a / "grid_detections.csv")).front() == "time_s,p,q,magnitude_db,r_m,v_mps");

    const auto c = scratch("det_c");
    REQUIRE(invoke({"simulate", "--scene", "fig4", "--window", "adaptive", "--snr-db", "20", "--seed", "10",
                    "--out", c.string()})
                .code == 0);
    CHECK(slurp(a / "image_0.csv") != slurp(c / "image_0.csv"));
}

TEST_CASE("simulate from a scene file and with grid only")
{
    const char* path = std::getenv("JCAS_EXAMPLE_SCENE");
    REQUIRE(path != nullptr);
    const auto dir = scratch("file");
    const auto r = invoke({"simulate", "--scene", path, "--estimator", "grid2d", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "rdmap_0.4.csv"));
    CHECK_FALSE(fs::exists(dir / "detections.csv"));
    const auto g = lines(slurp(dir / "grid_detections.csv"));
    CHECK(g.size() > 3);
}

TEST_CASE("simulate rejects bad input")
{
    const auto dir = scratch("bad");
    auto r = invoke({"simulate", "--scene", "nowhere.toml", "--out", dir.string()});
    CHECK(r.code != 0);
    CHECK(r.err.find("jcas simulate") != std::string::npos);

    const auto bad = dir / "bad.toml";
    std::ofstream(bad) << "[scene]\nmeasurement_times_s = [0.0\n";
    r = invoke({"simulate", "--scene", bad.string(), "--out", dir.string()});
    CHECK(r.code != 0);
    CHECK(r.err.find("line 2") != std::string::npos);

    CHECK(invoke({"simulate", "--window", "kaiser"}).code != 0);
    CHECK(invoke({"simulate", "--threshold-db", "3"}).code != 0);
    CHECK(invoke({}).code != 0);
}

TEST_CASE("capabilities")
{
    auto r = invoke({"capabilities"});
    REQUIRE(r.code == 0);
    for (const char* s : {"0.372024", "0.191327", "178.571", "91.8367", "0.0204082", "4.2517e-05"}) {
        CHECK(r.out.find(s) != std::string::npos);
    }

    const auto dir = scratch("caps");
    const auto dense = dir / "dense.toml";
    std::ofstream(dense) << "[ofdm]\nn_subcarriers = 480\nn_symbols = 480\n";
    r = invoke({"capabilities", "--config", dense.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("overhead_grid             1\n") != std::string::npos);

    const auto broken = dir / "broken.toml";
    std::ofstream(broken) << "[ofdm\n";
    CHECK(invoke({"capabilities", "--config", broken.string()}).code != 0);
    CHECK(invoke({"capabilities", "--config", (dir / "missing.toml").string()}).code != 0);
}

TEST_CASE("bench")
{
    auto r = invoke({"bench", "--counted-only"});
    REQUIRE(r.code == 0);
    for (const char* s : {"n=64  ratio_counted=128", "n=128  ratio_counted=256", "n=256  ratio_counted=512"}) {
        CHECK(r.out.find(s) != std::string::npos);
    }
    const auto dir = scratch("bench");
    r = invoke({"bench", "--n", "480", "--counted-only", "--out", dir.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("ratio_counted=960") != std::string::npos);
    const auto csv = lines(slurp(dir / "bench.csv"));
    CHECK(csv.front() == "algorithm,n,counted_multiplies,wall_time_ns");
    CHECK(csv[1] == "grid2d,480,221184000,0");
    CHECK(csv[2] == "diag,480,230400,0");

    r = invoke({"bench", "--repeats", "1"});
    CHECK(r.code != 0);
    CHECK(r.err.find("repeats") != std::string::npos);
}

TEST_CASE("allocation export")
{
    const auto dir = scratch("alloc");
    const auto path = dir / "diag.csv";
    const auto r = invoke({"allocation", "--kind", "diagonal", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto rows = lines(slurp(path));
    REQUIRE(rows.size() == 481);
    CHECK(rows[0] == "m,n");
    CHECK(rows[2] == "7,7");
}
