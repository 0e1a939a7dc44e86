// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "jcas/ambiguity.hpp"
#include "jcas/bench.hpp"
#include "jcas/config_file.hpp"
#include "jcas/csv.hpp"
#include "jcas/diag_estimator.hpp"
#include "jcas/error.hpp"
#include "jcas/grid_estimator.hpp"
#include "jcas/ofdm_config.hpp"
#include "jcas/scenario.hpp"

namespace jcas::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return f;
}

bool is_builtin(const std::string& name)
{
    return name == "fig4" || name == "fig5";
}

struct LoadedScene {
    Scene scene;
    OfdmConfig cfg;
};

LoadedScene load(const RunConfig& rc)
{
    LoadedScene out;
    if (is_builtin(rc.scene)) {
        out.scene = builtin_scene(rc.scene);
        out.cfg = OfdmConfig{};
    } else {
        const auto doc = load_config(rc.scene);
        out.scene = scene_from_config(doc);
        out.cfg = ofdm_config_from(doc);
    }
    if (!rc.ofdm_config.empty()) {
        out.cfg = ofdm_config_from(load_config(rc.ofdm_config));
    }
    out.scene.validate();
    return out;
}

void write_image(const fs::path& path, const RadarImage& img)
{
    auto f = open_output(path);
    f << "bin,magnitude_db\n";
    // Half spectrum for display; detection runs on the full one.
    const std::size_t last = img.size() / 2;
    for (std::size_t i = 0; i <= last && i < img.size(); ++i) {
        f << i << ',' << format_number(img.magnitude_db[i]) << '\n';
    }
}

/// Rect peaks plus any Hamming peak not already within min_separation of one.
std::vector<Peak> merge_peaks(std::vector<Peak> primary, const std::vector<Peak>& secondary, std::size_t n,
                              std::size_t min_separation)
{
    for (const auto& p : secondary) {
        const bool near = std::any_of(primary.begin(), primary.end(), [&](const Peak& q) {
            const std::size_t d = p.bin > q.bin ? p.bin - q.bin : q.bin - p.bin;
            return std::min(d, n - d) < min_separation;
        });
        if (!near) {
            primary.push_back(p);
        }
    }
    std::stable_sort(primary.begin(), primary.end(),
                     [](const Peak& a, const Peak& b) { return a.magnitude_db > b.magnitude_db; });
    return primary;
}

std::string window_label(WindowMode w)
{
    switch (w) {
    case WindowMode::Hamming:
        return "hamming";
    case WindowMode::Adaptive:
        return "adaptive";
    default:
        return "rect";
    }
}

} // namespace

double default_threshold_db(WindowMode window)
{
    return window == WindowMode::Rect ? -30.0 : -40.0;
}

int cmd_simulate(const RunConfig& rc, std::ostream& out, std::ostream& err)
{
    try {
        const auto [scene, cfg] = load(rc);
        cfg.validate_diagonal();
        for (std::size_t i = 1; i < scene.measurement_times.size(); ++i) {
            if (!(scene.measurement_times[i] > scene.measurement_times[i - 1])) {
                throw ConfigError("simulate: measurement times must be strictly increasing");
            }
        }
        fs::create_directories(rc.out_dir);

        const bool run_diag = rc.estimator != EstimatorMode::Grid2d;
        const bool run_grid = rc.estimator != EstimatorMode::Diag;
        const double threshold = rc.threshold_db.value_or(default_threshold_db(rc.window));
        const std::size_t n = cfg.n_diag;

        AmbiguityResolver resolver(cfg, scene.frame_interval);
        std::ostringstream detections;
        detections << "time_s,l1,l2,l_mean,l_delta,r_eq15_m,v_eq15_mps,r_eq16_m,v_eq16_mps,pair_mag_db,"
                      "track_id,resolved,r_m,v_mps\n";
        std::ostringstream grid_rows;
        grid_rows << "time_s,p,q,magnitude_db,r_m,v_mps\n";

        std::size_t frame = 0;
        for (double t : scene.measurement_times) {
            const std::uint64_t stream = 4 * frame++;
            const auto targets = targets_at(scene, t);
            if (targets.empty()) {
                out << "t=" << format_number(t) << " s: no vehicles ahead, frame skipped\n";
                continue;
            }
            const auto amps = echo_amplitudes(rc.budget, cfg, targets, derive_seed(rc.noise.rng_seed, stream));
            NoiseSpec noise = rc.noise;
            noise.rng_seed = derive_seed(rc.noise.rng_seed, stream + 1);
            const std::string stamp = format_number(t);

            if (run_diag) {
                const auto d = synthesize_diag(cfg, targets, amps, noise, rc.model);
                std::vector<Peak> peaks;
                if (rc.window == WindowMode::Adaptive) {
                    // The Hamming look uses the next block.
                    const double t2 = t + scene.frame_interval;
                    const auto targets2 = targets_at(scene, t2);
                    const auto rect_img = diag_spectrum(d);
                    write_image(rc.out_dir / ("image_" + stamp + ".csv"), rect_img);
                    peaks = detect_peaks_1d(rect_img, rc.threshold_db.value_or(default_threshold_db(WindowMode::Rect)),
                                            rc.min_separation);
                    if (!targets2.empty()) {
                        const auto amps2 =
                            echo_amplitudes(rc.budget, cfg, targets2, derive_seed(rc.noise.rng_seed, stream + 2));
                        NoiseSpec noise2 = rc.noise;
                        noise2.rng_seed = derive_seed(rc.noise.rng_seed, stream + 3);
                        const auto d2 = synthesize_diag(cfg, targets2, amps2, noise2, rc.model);
                        const auto ham_img = diag_spectrum(apply_window(d2, WindowKind::Hamming));
                        write_image(rc.out_dir / ("image_" + stamp + "_hamming.csv"), ham_img);
                        const auto ham_peaks = detect_peaks_1d(
                            ham_img, rc.threshold_db.value_or(default_threshold_db(WindowMode::Hamming)),
                            rc.min_separation);
                        peaks = merge_peaks(std::move(peaks), ham_peaks, n, rc.min_separation);
                    }
                } else {
                    const auto kind = rc.window == WindowMode::Hamming ? WindowKind::Hamming : WindowKind::Rectangular;
                    const auto img = diag_spectrum(apply_window(d, kind));
                    write_image(rc.out_dir / ("image_" + stamp + ".csv"), img);
                    peaks = detect_peaks_1d(img, threshold, rc.min_separation);
                }

                const auto pairing = pair_peaks(peaks, rc.pair_tolerance_db);
                const auto ids = resolver.update(t, pairing.pairs);
                std::map<std::uint32_t, const Hypothesis*> by_id;
                for (const auto& h : resolver.tracks()) {
                    by_id[h.track_id] = &h;
                }
                for (std::size_t i = 0; i < pairing.pairs.size(); ++i) {
                    const auto& p = pairing.pairs[i];
                    const auto cand = candidates(cfg, p);
                    const Hypothesis& track = *by_id.at(ids[i]);
                    const auto resolved = track.resolved_at(t);
                    detections << stamp << ',' << p.l1 << ',' << p.l2 << ','
                               << format_number(0.5 * static_cast<double>(p.l1 + p.l2)) << ',' << (p.l2 - p.l1) << ','
                               << format_number(cand.a.range) << ',' << format_number(cand.a.velocity) << ','
                               << format_number(cand.b.range) << ',' << format_number(cand.b.velocity) << ','
                               << format_number(p.magnitude_db) << ',' << ids[i] << ',' << to_string(track.chosen)
                               << ',' << (resolved ? format_number(resolved->range) : std::string{}) << ','
                               << (resolved ? format_number(resolved->velocity) : std::string{}) << '\n';
                }
                out << "t=" << stamp << " s: " << targets.size() << " vehicles, " << peaks.size() << " peaks, "
                    << pairing.pairs.size() << " pairs, " << pairing.orphans.size() << " unpaired\n";
            }

            if (run_grid) {
                const auto c = synthesize_grid(cfg, targets, amps, noise);
                const auto map = range_doppler_map(c, TransformPath::Fast);
                {
                    auto f = open_output(rc.out_dir / ("rdmap_" + stamp + ".csv"));
                    f << "p,q,magnitude_db\n";
                    for (std::size_t p = 0; p < map.n_range; ++p) {
                        for (std::size_t q = 0; q < map.n_doppler; ++q) {
                            f << p << ',' << q << ',' << format_number(map.at(p, q)) << '\n';
                        }
                    }
                }
                const auto found = detect_peaks_2d(cfg, map, threshold, 1);
                for (const auto& g : found) {
                    grid_rows << stamp << ',' << g.range_bin << ',' << g.doppler_bin << ','
                              << format_number(g.magnitude_db) << ',' << format_number(g.range) << ','
                              << format_number(g.velocity) << '\n';
                }
                out << "t=" << stamp << " s: grid2d " << found.size() << " detections\n";
            }
        }

        if (run_diag) {
            open_output(rc.out_dir / "detections.csv") << detections.str();
            auto f = open_output(rc.out_dir / "tracks.csv");
            f << "track_id,first_time_s,last_time_s,frames,score_a,score_b,resolved,r_m,v_mps\n";
            for (const auto& h : resolver.tracks()) {
                const double last = h.history.back().time;
                const auto resolved = h.resolved_at(last);
                f << h.track_id << ',' << format_number(h.history.front().time) << ',' << format_number(last) << ','
                  << h.history.size() << ',' << (h.a_valid ? format_number(h.score_a) : std::string("inf")) << ','
                  << (h.b_valid ? format_number(h.score_b) : std::string("inf")) << ',' << to_string(h.chosen) << ','
                  << (resolved ? format_number(resolved->range) : std::string{}) << ','
                  << (resolved ? format_number(resolved->velocity) : std::string{}) << '\n';
            }
        }
        if (run_grid) {
            open_output(rc.out_dir / "grid_detections.csv") << grid_rows.str();
        }
        out << "window=" << window_label(rc.window) << " outputs written to " << rc.out_dir.string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "jcas simulate: " << e.what() << '\n';
        return 1;
    }
}

int cmd_capabilities(const std::string& ofdm_config, std::ostream& out, std::ostream& err)
{
    try {
        const OfdmConfig cfg = ofdm_config.empty() ? OfdmConfig{} : ofdm_config_from(load_config(ofdm_config));
        const auto caps = capabilities(cfg);
        out << "range_resolution_m        " << format_number(caps.range_resolution) << '\n'
            << "velocity_resolution_mps   " << format_number(caps.velocity_resolution) << '\n'
            << "max_unambiguous_range_m   " << format_number(caps.max_unambiguous_range) << '\n'
            << "max_unambiguous_vel_mps   " << format_number(caps.max_unambiguous_velocity) << '\n'
            << "overhead_grid             " << format_number(overhead(build_allocation(cfg, AllocationKind::Grid)))
            << '\n';
        out << "overhead_diagonal         ";
        try {
            out << format_number(overhead(build_allocation(cfg, AllocationKind::Diagonal))) << '\n';
        } catch (const ConfigError& e) {
            out << "n/a (" << e.what() << ")\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "jcas capabilities: " << e.what() << '\n';
        return 1;
    }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err)
{
    try {
        BenchOptions opts;
        opts.repeats = args.repeats;
        opts.timed = !args.counted_only;
        opts.include_fast = args.with_fast;
        const auto report = run_bench(args.sizes, opts);
        out << format_table(report);
        if (args.out_dir) {
            fs::create_directories(*args.out_dir);
            open_output(*args.out_dir / "bench.csv") << format_csv(report);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "jcas bench: " << e.what() << '\n';
        return 2;
    }
}

int cmd_allocation(AllocationKind kind, const std::string& ofdm_config, const fs::path& out_file, std::ostream& out,
                   std::ostream& err)
{
    try {
        const OfdmConfig cfg = ofdm_config.empty() ? OfdmConfig{} : ofdm_config_from(load_config(ofdm_config));
        const auto alloc = build_allocation(cfg, kind);
        if (out_file.has_parent_path()) {
            fs::create_directories(out_file.parent_path());
        }
        auto f = open_output(out_file);
        f << "m,n\n";
        for (const auto& re : alloc.entries()) {
            f << re.subcarrier << ',' << re.symbol << '\n';
        }
        out << to_string(kind) << ": " << alloc.entries().size() << " sensing elements, overhead "
            << format_number(overhead(alloc)) << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "jcas allocation: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"OFDM joint communication and sensing radar simulator"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string window = "rect";
    std::string model = "dual-tone";
    std::string estimator = "diag";
    std::optional<double> snr_db;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    double threshold = 0.0;

    auto* sim = app.add_subcommand("simulate", "Run a scene through the channel and estimators, writing CSV artifacts");
    sim->add_option("--scene", rc.scene, "Builtin scene (fig4, fig5) or scene file path");
    sim->add_option("--config", rc.ofdm_config, "OFDM parameter file with an [ofdm] section");
    sim->add_option("--window", window, "rect | hamming | adaptive")
        ->check(CLI::IsMember({"rect", "hamming", "adaptive"}));
    sim->add_option("--model", model, "dual-tone | single-tone")->check(CLI::IsMember({"dual-tone", "single-tone"}));
    sim->add_option("--estimator", estimator, "diag | grid2d | both")
        ->check(CLI::IsMember({"diag", "grid2d", "both"}));
    sim->add_option("--snr-db", snr_db, "Per-sample SNR of the strongest echo; omit for a noiseless channel");
    sim->add_option("--seed", seed, "Seed for echo phases and noise");
    sim->add_option("--out", out_dir, "Output directory");
    auto* thr = sim->add_option("--threshold-db", threshold, "Detection threshold relative to the strongest cell")
                    ->check(CLI::Range(-400.0, -1e-9));
    sim->add_option("--min-separation", rc.min_separation, "Minimum bin spacing between reported peaks")
        ->check(CLI::PositiveNumber);
    sim->add_option("--pair-tolerance-db", rc.pair_tolerance_db, "Amplitude tolerance for peak pairing")
        ->check(CLI::PositiveNumber);

    std::string caps_config;
    auto* caps = app.add_subcommand("capabilities", "Print resolution, unambiguous limits and sensing overhead");
    caps->add_option("--config", caps_config, "OFDM parameter file with an [ofdm] section");

    BenchArgs bench_args;
    std::vector<std::size_t> sizes;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Count and time naive grid2d vs diagonal transforms");
    bench->add_option("--n", sizes, "Transform size(s)")->delimiter(',')->check(CLI::Range(2, 1 << 16));
    bench->add_option("--repeats", bench_args.repeats, "Timed repeats per size (>= 3)")->check(CLI::Range(3, 1000000));
    bench->add_flag("--counted-only", bench_args.counted_only, "Skip timing, report operation counts only");
    bench->add_flag("--with-fast", bench_args.with_fast, "Add supplementary FFTW timing rows");
    bench->add_option("--out", bench_out, "Directory for bench.csv");

    std::string alloc_kind = "grid";
    std::string alloc_config;
    std::string alloc_out = "allocation.csv";
    auto* alloc = app.add_subcommand("allocation", "Export sensing resource elements as m,n CSV");
    alloc->add_option("--kind", alloc_kind, "grid | diagonal")->check(CLI::IsMember({"grid", "diagonal"}));
    alloc->add_option("--config", alloc_config, "OFDM parameter file with an [ofdm] section");
    alloc->add_option("--out", alloc_out, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (*sim) {
        rc.window = window == "hamming" ? WindowMode::Hamming
                    : window == "adaptive" ? WindowMode::Adaptive
                                           : WindowMode::Rect;
        rc.model = model == "single-tone" ? DiagonalModel::SingleTone : DiagonalModel::DualTone;
        rc.estimator = estimator == "grid2d" ? EstimatorMode::Grid2d
                       : estimator == "both" ? EstimatorMode::Both
                                             : EstimatorMode::Diag;
        rc.noise.snr_db = snr_db;
        rc.noise.rng_seed = seed;
        rc.out_dir = out_dir;
        if (thr->count() > 0) {
            rc.threshold_db = threshold;
        }
        return cmd_simulate(rc, out, err);
    }
    if (*caps) {
        return cmd_capabilities(caps_config, out, err);
    }
    if (*bench) {
        if (!sizes.empty()) {
            bench_args.sizes = sizes;
        }
        if (!bench_out.empty()) {
            bench_args.out_dir = bench_out;
        }
        return cmd_bench(bench_args, out, err);
    }
    return cmd_allocation(alloc_kind == "diagonal" ? AllocationKind::Diagonal : AllocationKind::Grid, alloc_config,
                          alloc_out, out, err);
}

} // namespace jcas::cli
