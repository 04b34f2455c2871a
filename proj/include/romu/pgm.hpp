#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "romu/bits.hpp"

// Binary PGM (P5) images and the 10-bit successive-pair dot-plots that
// contrast a lattice-bound LCG with the rotate-multiply map.

namespace romu::pgm {

struct Image {
    unsigned width = 0;
    unsigned height = 0;
    std::vector<uint8_t> pixels;  // row-major, 0 = black

    Image(unsigned w, unsigned h, uint8_t fill = 255)
        : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

    uint8_t& at(unsigned x, unsigned y) { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t at(unsigned x, unsigned y) const {
        return pixels[static_cast<size_t>(y) * width + x];
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + path);
        out << "P5\n" << width << " " << height << "\n255\n";
        out.write(reinterpret_cast<const char*>(pixels.data()),
                  static_cast<std::streamsize>(pixels.size()));
        if (!out) throw std::runtime_error("write failed: " + path);
    }
};

enum class DotPlotKind { lcg477, romu_r4_m715 };

struct DotPlotStats {
    uint64_t period = 0;          // cycle length from seed 1
    uint64_t distinct_pairs = 0;  // set pixels
    double collinear_fraction = 0;
};

namespace detail {

inline uint32_t step10(DotPlotKind kind, uint32_t x) {
    constexpr uint32_t mask10 = 0x3FF;
    if (kind == DotPlotKind::lcg477) return (477u * x) & mask10;
    return (rotl_w(x, 4, 10) * 715u) & mask10;
}

struct Point {
    int x, y;
};

// Fraction of exactly collinear triples among a deterministic subsample
// of the plotted points; lattice-bound maps score high.
inline double collinear_fraction(const std::vector<Point>& points) {
    if (points.size() < 3) return 0;
    std::vector<Point> sample;
    const size_t stride = points.size() / 96 + 1;
    for (size_t i = 0; i < points.size(); i += stride) sample.push_back(points[i]);
    uint64_t collinear = 0, total = 0;
    for (size_t a = 0; a < sample.size(); ++a)
        for (size_t b = a + 1; b < sample.size(); ++b)
            for (size_t c = b + 1; c < sample.size(); ++c) {
                const int64_t cross =
                    static_cast<int64_t>(sample[b].x - sample[a].x) * (sample[c].y - sample[a].y) -
                    static_cast<int64_t>(sample[b].y - sample[a].y) * (sample[c].x - sample[a].x);
                total += 1;
                collinear += (cross == 0);
            }
    return total ? static_cast<double>(collinear) / static_cast<double>(total) : 0.0;
}

}  // namespace detail

// All successive output pairs over the entire cycle from seed 1, one
// black pixel per distinct pair on a 1024x1024 white canvas.
inline Image dotplot(DotPlotKind kind, DotPlotStats* stats = nullptr) {
    Image img(1024, 1024);
    std::vector<detail::Point> points;
    uint32_t x = 1;
    uint64_t period = 0;
    do {
        const uint32_t nx = detail::step10(kind, x);
        if (img.at(nx, x) == 255) {
            img.at(nx, x) = 0;
            points.push_back({static_cast<int>(x), static_cast<int>(nx)});
        }
        x = nx;
        ++period;
    } while (x != 1);
    if (stats) {
        stats->period = period;
        stats->distinct_pairs = points.size();
        stats->collinear_fraction = detail::collinear_fraction(points);
    }
    return img;
}

}  // namespace romu::pgm
