// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "jcas/bench.hpp"

using namespace jcas;

TEST_CASE("operation counts")
{
    CHECK(count_ops(Algorithm::Grid2d, 8).complex_multiplies == 2u * 8u * 8u * 8u);
    CHECK(count_ops(Algorithm::Diag, 8).complex_multiplies == 64u);
    CHECK(count_ops(Algorithm::Diag, 2).complex_multiplies == 4u);
    for (std::size_t n : {16u, 48u, 64u, 100u}) {
        const double ratio = static_cast<double>(count_ops(Algorithm::Grid2d, n).complex_multiplies) /
                             static_cast<double>(count_ops(Algorithm::Diag, n).complex_multiplies);
        CHECK(ratio == static_cast<double>(2 * n));
    }
    const auto op = count_ops(Algorithm::Diag, 480);
    CHECK(op.complex_multiplies == 230400u);
    CHECK(op.n == 480);
    CHECK_FALSE(op.transform_label.empty());
    CHECK_THROWS(count_ops(Algorithm::Grid2d, 1));
    CHECK(to_string(Algorithm::Grid2d) == "grid2d");
    CHECK(to_string(Algorithm::Diag) == "diag");
}

TEST_CASE("report shape and ratios")
{
    const std::vector<std::size_t> sizes{64, 128};
    BenchOptions opt;
    opt.repeats = 3;
    const auto rep = run_bench(sizes, opt);
    REQUIRE(rep.rows.size() == 4);
    REQUIRE(rep.ratios.size() == 2);
    CHECK(rep.ratios[0].counted == 128.0);
    CHECK(rep.ratios[1].counted == 256.0);
    CHECK(rep.ratios[0].time > 0.0);
    for (const auto& r : rep.rows) {
        CHECK(r.wall_time_ns > 0.0);
    }
    const auto csv = format_csv(rep);
    CHECK(csv.rfind("algorithm,n,counted_multiplies,wall_time_ns\n", 0) == 0);
    CHECK(csv.find("grid2d,64,524288,") != std::string::npos);
    CHECK(csv.find("diag,128,16384,") != std::string::npos);
    CHECK(format_table(rep).find("grid2d") != std::string::npos);
}

TEST_CASE("untimed, fast rows and edge cases")
{
    const std::vector<std::size_t> sizes{32};
    BenchOptions opt;
    opt.timed = false;
    opt.include_fast = true;
    const auto rep = run_bench(sizes, opt);
    REQUIRE(rep.ratios.size() == 1);
    CHECK(rep.ratios[0].counted == 64.0);
    CHECK(rep.ratios[0].time == 0.0);
    int fast = 0;
    for (const auto& r : rep.rows) {
        if (r.algorithm.ends_with("_fft")) {
            ++fast;
            CHECK(r.counted_multiplies == 0u);
        }
    }
    CHECK(fast == 2);

    const std::vector<std::size_t> none;
    CHECK(run_bench(none).rows.empty());
    BenchOptions one;
    one.repeats = 1;
    CHECK_THROWS(run_bench(sizes, one));
    const std::vector<std::size_t> tiny{1};
    CHECK_THROWS(run_bench(tiny));
}
