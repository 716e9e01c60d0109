#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "merosin/orbit.hpp"

namespace merosin {

struct Window {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    int width = 0, height = 0;

    void validate() const {
        if (!(x_min < x_max && y_min < y_max && width >= 1 && height >= 1))
            throw std::invalid_argument("Window: requires x_min < x_max, y_min < y_max, size >= 1x1");
    }
    /// Geometric center of pixel (i, j); row 0 is the top of the image (y_max).
    cplx pixel_center(int i, int j) const {
        const double dx = (x_max - x_min) / width;
        const double dy = (y_max - y_min) / height;
        return {x_min + (i + 0.5) * dx, y_max - (j + 0.5) * dy};
    }
};

enum class BasinLabel : std::uint8_t {
    Origin = 0,
    RealFixedPlus = 1,
    RealFixedMinus = 2,
    ImagTwoCycle = 3,
    Escaped = 4,
    PoleHit = 5,
    Undecided = 6,
};

inline constexpr int kBasinLabelCount = 7;

inline const char* to_string(BasinLabel l) {
    switch (l) {
        case BasinLabel::Origin: return "origin";
        case BasinLabel::RealFixedPlus: return "real_fixed_plus";
        case BasinLabel::RealFixedMinus: return "real_fixed_minus";
        case BasinLabel::ImagTwoCycle: return "imag_two_cycle";
        case BasinLabel::Escaped: return "escaped";
        case BasinLabel::PoleHit: return "pole_hit";
        case BasinLabel::Undecided: return "undecided";
    }
    return "?";
}

inline BasinLabel label_of(const OrbitOutcome& o) {
    switch (o.status) {
        case OrbitStatus::Escaped: return BasinLabel::Escaped;
        case OrbitStatus::PoleHit: return BasinLabel::PoleHit;
        case OrbitStatus::Undecided: return BasinLabel::Undecided;
        case OrbitStatus::Converged: break;
    }
    switch (o.attractor) {
        case AttractorId::Origin: return BasinLabel::Origin;
        case AttractorId::RealFixedPlus: return BasinLabel::RealFixedPlus;
        case AttractorId::RealFixedMinus: return BasinLabel::RealFixedMinus;
        case AttractorId::ImagTwoCycle: return BasinLabel::ImagTwoCycle;
    }
    return BasinLabel::Undecided;
}

struct ClassifiedGrid {
    Window window;
    double lambda = 0.0;
    std::vector<BasinLabel> labels;      // row-major, row 0 = top (y_max)
    std::vector<std::int32_t> iterations;

    BasinLabel label(int i, int j) const {
        return labels[static_cast<size_t>(j) * window.width + i];
    }
};

struct RenderOptions {
    OrbitOptions orbit;
    int threads = 0;  // <= 0: hardware concurrency
};

/// Classify every pixel center against the attractor inventory. Pixels are
/// independent, results land in disjoint slots, and scanlines are assigned in
/// fixed blocks, so the output is identical for any worker count.
inline ClassifiedGrid render_grid(const ParamPoint& p, const Window& w,
                                  const AttractorInventory& inv, RenderOptions ropts = {}) {
    w.validate();
    ClassifiedGrid grid;
    grid.window = w;
    grid.lambda = p.lambda();
    grid.labels.assign(static_cast<size_t>(w.width) * w.height, BasinLabel::Undecided);
    grid.iterations.assign(static_cast<size_t>(w.width) * w.height, 0);

    OrbitOptions opts = ropts.orbit;
    if (opts.escape_radius <= 0.0) opts.escape_radius = std::max(1e3, 10.0 * p.pole_ordinate());

    int threads = ropts.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > w.height) threads = w.height;

    auto work = [&](int row_begin, int row_end) {
        for (int j = row_begin; j < row_end; ++j) {
            for (int i = 0; i < w.width; ++i) {
                const OrbitOutcome o = iterate_orbit(w.pixel_center(i, j), p, inv, opts);
                const size_t idx = static_cast<size_t>(j) * w.width + i;
                grid.labels[idx] = label_of(o);
                grid.iterations[idx] = o.iterations;
            }
        }
    };

    if (threads == 1) {
        work(0, w.height);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const int rows_per = (w.height + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int lo = t * rows_per;
            const int hi = std::min(w.height, lo + rows_per);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

inline std::map<BasinLabel, double> basin_fractions(const ClassifiedGrid& g) {
    std::array<std::int64_t, kBasinLabelCount> counts{};
    for (BasinLabel l : g.labels) ++counts[static_cast<size_t>(l)];
    std::map<BasinLabel, double> out;
    const double total = static_cast<double>(g.labels.size());
    for (int k = 0; k < kBasinLabelCount; ++k)
        out[static_cast<BasinLabel>(k)] = counts[static_cast<size_t>(k)] / total;
    return out;
}

using Rgb = std::array<std::uint8_t, 3>;

struct Palette {
    std::array<Rgb, kBasinLabelCount> rgb;
    Rgb operator[](BasinLabel l) const { return rgb[static_cast<size_t>(l)]; }
};

/// Basins of the stable locus in the red family, escape in black, pole hits
/// in white, undecided in gray.
inline Palette default_palette() {
    Palette p;
    p.rgb[static_cast<size_t>(BasinLabel::Origin)] = {220, 20, 20};
    p.rgb[static_cast<size_t>(BasinLabel::RealFixedPlus)] = {240, 160, 40};
    p.rgb[static_cast<size_t>(BasinLabel::RealFixedMinus)] = {160, 240, 40};
    p.rgb[static_cast<size_t>(BasinLabel::ImagTwoCycle)] = {20, 90, 220};
    p.rgb[static_cast<size_t>(BasinLabel::Escaped)] = {0, 0, 0};
    p.rgb[static_cast<size_t>(BasinLabel::PoleHit)] = {255, 255, 255};
    p.rgb[static_cast<size_t>(BasinLabel::Undecided)] = {128, 128, 128};
    return p;
}

/// Binary PPM (P6): "P6\n<w> <h>\n255\n" followed by row-major RGB triples,
/// top row first. Byte-exact for identical grids and palettes.
inline void write_ppm(const ClassifiedGrid& g, const Palette& palette, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open '" + path + "' for writing");
    out << "P6\n" << g.window.width << ' ' << g.window.height << "\n255\n";
    std::vector<std::uint8_t> row(static_cast<size_t>(g.window.width) * 3);
    for (int j = 0; j < g.window.height; ++j) {
        for (int i = 0; i < g.window.width; ++i) {
            const Rgb c = palette[g.label(i, j)];
            row[static_cast<size_t>(i) * 3 + 0] = c[0];
            row[static_cast<size_t>(i) * 3 + 1] = c[1];
            row[static_cast<size_t>(i) * 3 + 2] = c[2];
        }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("write_ppm: write failed for '" + path + "'");
}

}  // namespace merosin
