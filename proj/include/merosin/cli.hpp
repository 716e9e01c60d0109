#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "merosin/report.hpp"
#include "merosin/verify.hpp"

namespace merosin::cli {

/// Exit codes: 0 success, 1 validation error, 2 numerical non-convergence,
/// 3 verify failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitVerifyFailed = 3;

namespace detail {

inline int default_threads() {
    if (const char* env = std::getenv("MEROSIN_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 0;  // resolved to hardware concurrency downstream
}

inline std::filesystem::path default_cache_path() {
    if (const char* env = std::getenv("MEROSIN_CACHE"))
        return std::filesystem::path(env);
    return std::filesystem::temp_directory_path() / "merosin_params_cache.json";
}

/// The lambda_1/lambda_2 solves are reused by most subcommands; memoize the
/// whole ladder in a small JSON file keyed by the solver tolerance.
inline constexpr const char* kCacheKey = "newton-hybrid-1e-15";

inline BifurcationConstants cached_constants(const std::filesystem::path& path) {
    {
        std::ifstream in(path);
        if (in) {
            try {
                const json j = json::parse(in);
                if (j.at("tolerance_key").get<std::string>() == kCacheKey)
                    return constants_from_json(j.at("constants"));
            } catch (const std::exception&) {
                // stale or foreign file: recompute and rewrite below
            }
        }
    }
    const BifurcationConstants c = compute_constants();
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path);
    if (out) {
        json j{{"tolerance_key", kCacheKey}, {"constants", to_json(c)}};
        out << j.dump(2) << '\n';
    }
    return c;
}

inline std::vector<double> split_doubles(const std::string& s, char sep, size_t expected,
                                         const std::string& what) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t next = s.find(sep, pos);
        const std::string tok =
            next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "cannot parse '" + tok + "' as a number");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.size() != expected)
        throw CLI::ValidationError(what, "expected " + std::to_string(expected) +
                                             " numbers separated by '" + sep + "'");
    return out;
}

}  // namespace detail

/// Parse and run one command. Streams are injectable so the suite can drive
/// the CLI in-process.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"merosin: dynamics of the meromorphic family sin(z)/(z^2 + lambda)"};
    app.require_subcommand(1);

    // --- params -------------------------------------------------------------
    auto* cmd_params = app.add_subcommand("params", "bifurcation constants as JSON");
    std::string cache_path = detail::default_cache_path().string();
    bool no_cache = false;
    cmd_params->add_option("--cache", cache_path, "constants cache file");
    cmd_params->add_flag("--no-cache", no_cache, "recompute without touching the cache");

    // --- fixed-points ---------------------------------------------------------
    auto* cmd_fixed = app.add_subcommand("fixed-points", "fixed points, cycles and singular values");
    double fp_lambda = 0.0;
    int fp_nmax = 32;
    cmd_fixed->add_option("--lambda", fp_lambda, "family parameter (> 0)")->required();
    cmd_fixed->add_option("--n-max", fp_nmax, "critical-point catalog half-width")
        ->check(CLI::PositiveNumber);

    // --- orbit ----------------------------------------------------------------
    auto* cmd_orbit = app.add_subcommand("orbit", "classify the orbit of one seed");
    double orbit_lambda = 0.0;
    std::string orbit_z;
    int orbit_max_iter = 0;
    cmd_orbit->add_option("--lambda", orbit_lambda, "family parameter (> 0)")->required();
    cmd_orbit->add_option("--z", orbit_z, "seed as RE,IM")->required();
    cmd_orbit->add_option("--max-iter", orbit_max_iter, "iteration budget override");

    // --- chaos-cert -------------------------------------------------------------
    auto* cmd_chaos = app.add_subcommand("chaos-cert", "turbulence certificate for the real map");
    double chaos_lambda = 0.0;
    cmd_chaos->add_option("--lambda", chaos_lambda, "family parameter (> 0)")->required();

    // --- bifurcation -------------------------------------------------------------
    auto* cmd_bif = app.add_subcommand("bifurcation", "attractor scan over a lambda range (CSV)");
    std::string bif_axis, bif_range, bif_out;
    int bif_steps = 0, bif_transient = 2000, bif_keep = 64;
    cmd_bif->add_option("--axis", bif_axis, "real | imag")
        ->required()
        ->check(CLI::IsMember({"real", "imag"}));
    cmd_bif->add_option("--range", bif_range, "LO:HI")->required();
    cmd_bif->add_option("--steps", bif_steps, "number of lambda samples")
        ->required()
        ->check(CLI::Range(2, 1000000));
    cmd_bif->add_option("--out", bif_out, "output CSV path")->required();
    cmd_bif->add_option("--transient", bif_transient, "discarded iterations per lambda")
        ->check(CLI::NonNegativeNumber);
    cmd_bif->add_option("--keep", bif_keep, "retained samples per lambda")
        ->check(CLI::PositiveNumber);

    // --- render -------------------------------------------------------------------
    auto* cmd_render = app.add_subcommand("render", "classify a pixel grid and write a PPM image");
    double render_lambda = 0.0;
    std::string render_window, render_size = "900x600", render_out, render_csv;
    int render_threads = detail::default_threads();
    int render_max_iter = 0;
    cmd_render->add_option("--lambda", render_lambda, "family parameter (> 0)")->required();
    cmd_render->add_option("--window", render_window, "X0:X1:Y0:Y1")->required();
    cmd_render->add_option("--size", render_size, "WxH pixels")->capture_default_str();
    cmd_render->add_option("--out", render_out, "output PPM path")->required();
    cmd_render->add_option("--csv", render_csv, "optional per-pixel CSV dump");
    cmd_render->add_option("--threads", render_threads, "worker threads (default: all cores)");
    cmd_render->add_option("--max-iter", render_max_iter, "iteration budget override");

    // --- verify -------------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the full property and acceptance suite");
    bool verify_fast = false;
    int verify_threads = detail::default_threads();
    std::string verify_only, verify_tamper, verify_out;
    cmd_verify->add_flag("--fast", verify_fast, "skip the figure-scale render checks");
    cmd_verify->add_option("--threads", verify_threads, "worker threads for render checks");
    cmd_verify->add_option("--only", verify_only, "run only check groups with this prefix");
    cmd_verify->add_option("--tamper", verify_tamper,
                           "test hook: perturb a named constant to force a failure");
    cmd_verify->add_option("--out", verify_out, "write the JSON report to a file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*cmd_params) {
            const BifurcationConstants c = no_cache
                                               ? compute_constants()
                                               : detail::cached_constants(cache_path);
            out << to_json(c).dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_fixed) {
            const ParamPoint p(fp_lambda);
            const BifurcationConstants c = compute_constants();
            json j;
            j["lambda"] = round15(fp_lambda);
            j["regime"] = to_json(regime(p, c));
            json reals = json::array();
            for (const auto& r : real_fixed_points(p)) reals.push_back(to_json(r));
            j["real_fixed_points"] = reals;
            json imags = json::array();
            for (const auto& r : imag_fixed_points(p)) imags.push_back(to_json(r));
            j["imag_fixed_points"] = imags;
            json cycles = json::array();
            for (const auto& r : imag_two_cycles(p, c)) cycles.push_back(to_json(r));
            j["imag_two_cycles"] = cycles;
            j["singular_values"] = to_json(singular_values(p, fp_nmax));
            if (fp_lambda > 1.0) j["invariant_disk_radius"] = round15(invariant_disk_radius(p));
            out << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_orbit) {
            const ParamPoint p(orbit_lambda);
            const auto z = detail::split_doubles(orbit_z, ',', 2, "--z");
            const BifurcationConstants c = compute_constants();
            const AttractorInventory inv = attractor_inventory(p, c);
            OrbitOptions opts = default_orbit_options(p, inv.parabolic);
            if (orbit_max_iter > 0) opts.max_iter = orbit_max_iter;
            const OrbitOutcome o = iterate_orbit(cplx{z[0], z[1]}, p, inv, opts);
            json j = to_json(o);
            j["lambda"] = round15(orbit_lambda);
            j["z0"] = {round15(z[0]), round15(z[1])};
            out << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_chaos) {
            const ParamPoint p(chaos_lambda);
            out << to_json(chaos_certificate(p)).dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_bif) {
            const auto range = detail::split_doubles(bif_range, ':', 2, "--range");
            const ScanAxis axis = bif_axis == "real" ? ScanAxis::Real : ScanAxis::Imag;
            const BifurcationTable t =
                bifurcation_scan(axis, range[0], range[1], bif_steps, bif_transient, bif_keep);
            write_bifurcation_csv(t, bif_out);
            int kept = 0;
            for (const auto& row : t.rows) kept += static_cast<int>(row.ordinates.size());
            out << json{{"rows", t.rows.size()}, {"samples", kept}, {"out", bif_out}}.dump(2)
                << '\n';
            return kExitOk;
        }

        if (*cmd_render) {
            const ParamPoint p(render_lambda);
            const auto win = detail::split_doubles(render_window, ':', 4, "--window");
            const auto xpos = render_size.find('x');
            if (xpos == std::string::npos)
                throw CLI::ValidationError("--size", "expected WxH");
            Window w;
            w.x_min = win[0];
            w.x_max = win[1];
            w.y_min = win[2];
            w.y_max = win[3];
            try {
                w.width = std::stoi(render_size.substr(0, xpos));
                w.height = std::stoi(render_size.substr(xpos + 1));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--size", "expected WxH");
            }
            w.validate();
            const BifurcationConstants c = compute_constants();
            const AttractorInventory inv = attractor_inventory(p, c);
            RenderOptions ropts;
            ropts.orbit = default_orbit_options(p, inv.parabolic);
            if (render_max_iter > 0) ropts.orbit.max_iter = render_max_iter;
            ropts.threads = render_threads;
            const ClassifiedGrid g = render_grid(p, w, inv, ropts);
            write_ppm(g, default_palette(), render_out);
            if (!render_csv.empty()) write_grid_csv(g, render_csv);
            json fr;
            for (const auto& [label, f] : basin_fractions(g)) fr[to_string(label)] = round15(f);
            out << json{{"out", render_out}, {"fractions", fr}}.dump(2) << '\n';
            return kExitOk;
        }

        if (*cmd_verify) {
            verify::Options vopts;
            vopts.fast = verify_fast;
            vopts.threads = verify_threads;
            vopts.only = verify_only;
            vopts.tamper = verify_tamper;
            const verify::Report rep = verify::run_verify(vopts);
            const json j = verify::to_json(rep);
            out << j.dump(2) << '\n';
            if (!verify_out.empty()) {
                std::ofstream f(verify_out);
                if (!f) throw std::runtime_error("verify: cannot open '" + verify_out + "'");
                f << j.dump(2) << '\n';
            }
            int failed = 0;
            for (const auto& chk : rep.checks)
                if (!chk.pass) {
                    ++failed;
                    err << "FAIL " << chk.name << '\n';
                }
            err << (rep.all_pass ? "verify: all " : "verify: FAILED ")
                << rep.checks.size() - failed << "/" << rep.checks.size() << " checks passed\n";
            return rep.all_pass ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonConvergence& e) {
        err << "numerical non-convergence: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace merosin::cli
