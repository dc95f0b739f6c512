#include "lipgroove/threshold.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace lipgroove {

double mean_intensity(const GrayImage& r) {
    if (r.empty())
        throw InvalidArgument("mean_intensity: empty raster");
    std::uint64_t sum = 0;
    for (auto v : r.pixels()) sum += v;
    return static_cast<double>(sum) / static_cast<double>(r.size());
}

ThresholdTrace iterative_threshold(const GrayImage& r, double epsilon) {
    if (r.empty())
        throw InvalidArgument("iterative_threshold: empty raster");
    if (!(epsilon > 0.0))
        throw InvalidArgument("iterative_threshold: epsilon must be positive");

    // Histogram view: cluster means are exact integer ratios, so this is
    // bit-identical to rescanning the pixels each iteration.
    std::array<std::uint64_t, 256> hist{};
    for (auto v : r.pixels()) ++hist[v];

    ThresholdTrace trace;
    trace.epsilon = epsilon;
    double t = mean_intensity(r);
    trace.iterations.push_back(t);

    for (;;) {
        std::uint64_t n1 = 0, s1 = 0, n2 = 0, s2 = 0;
        for (int v = 0; v < 256; ++v) {
            if (static_cast<double>(v) < t) {
                n1 += hist[v];
                s1 += hist[v] * static_cast<std::uint64_t>(v);
            } else {
                n2 += hist[v];
                s2 += hist[v] * static_cast<std::uint64_t>(v);
            }
        }
        double m1 = n1 ? static_cast<double>(s1) / static_cast<double>(n1) : t;
        double m2 = n2 ? static_cast<double>(s2) / static_cast<double>(n2) : t;
        double next = (m1 + m2) / 2.0;
        trace.iterations.push_back(next);
        if (std::abs(t - next) <= epsilon) break;
        t = next;
    }
    trace.final = trace.iterations.back();
    return trace;
}

SegmentMask segment(const GrayImage& r, double threshold) {
    SegmentMask mask(r.width(), r.height());
    for (int y = 0; y < r.height(); ++y)
        for (int x = 0; x < r.width(); ++x)
            mask.set(x, y, static_cast<double>(r.at(x, y)) < threshold);
    return mask;
}

GrayImage blacken_background(const GrayImage& r, const SegmentMask& m) {
    if (r.width() != m.width() || r.height() != m.height())
        throw DimensionMismatch("blacken_background: mask dimensions differ from raster");
    GrayImage out(r.width(), r.height());
    for (int y = 0; y < r.height(); ++y)
        for (int x = 0; x < r.width(); ++x)
            out.at(x, y) = m.get(x, y) ? r.at(x, y) : 0;
    return out;
}

}  // namespace lipgroove
