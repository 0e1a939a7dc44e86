// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "jcas/grid_estimator.hpp"
#include "oracle.hpp"

using namespace jcas;

namespace {

OfdmConfig small_config(std::size_t n)
{
    OfdmConfig cfg;
    cfg.n_sensing_freq = cfg.n_sensing_time = cfg.n_diag = n;
    cfg.n_subcarriers = cfg.n_symbols = 7 * n;
    return cfg;
}

} // namespace

TEST_CASE("fast and naive 2D spectra match the double-sum oracle")
{
    std::mt19937_64 gen(21);
    for (std::size_t n : {4u, 12u, 32u}) {
        const auto c = oracle::random_matrix(n, n, gen);
        const auto ref = oracle::range_doppler(c);
        const double scale = oracle::max_abs(ref.values());
        for (auto path : {TransformPath::Naive, TransformPath::Fast}) {
            const auto z = range_doppler_spectrum(c, path);
            CHECK(oracle::max_abs_diff(z.values(), ref.values()) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("rectangular blocks")
{
    std::mt19937_64 gen(22);
    const auto c = oracle::random_matrix(6, 10, gen);
    const auto ref = oracle::range_doppler(c);
    const auto z = range_doppler_spectrum(c);
    CHECK(oracle::max_abs_diff(z.values(), ref.values()) <= 1e-9 * oracle::max_abs(ref.values()));
}

TEST_CASE("pass composition")
{
    std::mt19937_64 gen(23);
    const auto c = oracle::random_matrix(16, 16, gen);
    const auto z = range_pass(doppler_pass(c));
    const auto ref = range_doppler_spectrum(c);
    CHECK(oracle::max_abs_diff(z.values(), ref.values()) <= 1e-12 * oracle::max_abs(ref.values()));
}

TEST_CASE("naive counter gives 2 n^3")
{
    std::mt19937_64 gen(24);
    const auto c = oracle::random_matrix(16, 16, gen);
    OpCounter ops;
    range_doppler_spectrum(c, TransformPath::Naive, &ops);
    CHECK(ops.complex_multiplies == 2u * 16u * 16u * 16u);
}

TEST_CASE("target at 40 m and 5 m/s")
{
    const OfdmConfig cfg;
    const std::vector<Target> t{{40, 5, 1}};
    const std::vector<cplx> amp{1.0};
    const auto map = range_doppler_map(synthesize_grid(cfg, t, amp));
    const auto det = detect_peaks_2d(cfg, map, -30.0, 1);
    REQUIRE(!det.empty());
    CHECK(det[0].range_bin == 108);
    CHECK(det[0].doppler_bin == 26);
    CHECK(det[0].magnitude_db == doctest::Approx(0.0));
    CHECK(det[0].range == doctest::Approx(40.17857142857143));
    CHECK(det[0].velocity == doctest::Approx(4.974489795918367));
}

TEST_CASE("on-bin target gives a single clean peak")
{
    const auto cfg = small_config(32);
    // Range 3 bins, Doppler 5 bins exactly.
    const double dr = capabilities(cfg).range_resolution;
    const double dv = capabilities(cfg).velocity_resolution;
    const std::vector<Target> t{{3 * dr, 5 * dv, 1}};
    const std::vector<cplx> amp{2.0};
    const auto c = synthesize_grid(cfg, t, amp);
    const auto z = range_doppler_spectrum(c);
    // Energy N_t * |amp| lands at (3, 5).
    CHECK(std::abs(z(3, 5)) == doctest::Approx(2.0 * 32.0).epsilon(1e-9));
    const auto map = range_doppler_map(c);
    const auto det = detect_peaks_2d(cfg, map, -100.0, 1);
    REQUIRE(det.size() == 1);
    CHECK(det[0].range_bin == 3);
    CHECK(det[0].doppler_bin == 5);
}

TEST_CASE("detector preconditions and estimate bounds")
{
    const OfdmConfig cfg;
    RangeDopplerMap map{4, 4, std::vector<double>(16, -50.0)};
    map.magnitude_db[5] = 0.0;
    CHECK_THROWS(detect_peaks_2d(cfg, map, 0.0, 1));
    CHECK_THROWS(detect_peaks_2d(cfg, map, -10.0, 0));
    const auto det = detect_peaks_2d(cfg, map, -10.0, 1);
    REQUIRE(det.size() == 1);
    CHECK(det[0].range_bin == 1);
    CHECK(det[0].doppler_bin == 1);
    CHECK_THROWS_AS(bins_to_estimate(cfg, 480, 0), std::out_of_range);
    CHECK_THROWS_AS(bins_to_estimate(cfg, 0, 480), std::out_of_range);
    const auto e = bins_to_estimate(cfg, 1, 1);
    CHECK(e.range == doctest::Approx(0.37202380952380953));
    CHECK(e.velocity == doctest::Approx(0.1913265306122449));
}
