#include "lipgroove/raster.hpp"

#include <algorithm>
#include <cmath>

namespace lipgroove {

std::uint8_t round_clamp_u8(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<std::uint8_t>(r);
}

GrayImage to_grayscale(const RgbImage& c) {
    GrayImage out(c.width(), c.height());
    auto src = c.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        double luma = 0.299 * src[i].r + 0.587 * src[i].g + 0.114 * src[i].b;
        dst[i] = round_clamp_u8(luma);
    }
    return out;
}

GrayImage complement(const GrayImage& r) {
    GrayImage out(r.width(), r.height());
    auto src = r.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] = static_cast<std::uint8_t>(255 - src[i]);
    return out;
}

GrayImage rescale_to_u8(const FloatImage& r, RescaleMode mode) {
    GrayImage out(r.width(), r.height());
    auto src = r.pixels();
    auto dst = out.pixels();
    if (mode == RescaleMode::ClampAbsQuarter) {
        for (std::size_t i = 0; i < src.size(); ++i)
            dst[i] = round_clamp_u8(std::min(std::abs(src[i]) / 4.0, 255.0));
        return out;
    }
    auto [lo, hi] = std::minmax_element(src.begin(), src.end());
    double min = *lo, max = *hi;
    if (min == max) {
        return out;  // degenerate range: all zero
    }
    double scale = 255.0 / (max - min);
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] = round_clamp_u8((src[i] - min) * scale);
    return out;
}

GrayImage to_gray(const BinaryMap& m, std::uint8_t on, std::uint8_t off) {
    GrayImage out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x)
            out.at(x, y) = m.get(x, y) ? on : off;
    return out;
}

}  // namespace lipgroove
