#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lipgroove/errors.hpp"

namespace lipgroove {

/// Rectangular pixel grid, row-major, top row first. `x` is the column
/// (increasing rightward), `y` the row (increasing downward).
template <typename T>
class Image {
public:
    Image() = default;

    Image(int width, int height, T fill = T{})
        : width_(width), height_(height) {
        check_dims(width, height);
        pixels_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    Image(int width, int height, std::vector<T> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        check_dims(width, height);
        if (pixels_.size() != static_cast<std::size_t>(width) * height)
            throw InvalidArgument("pixel buffer size does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    T& at(int x, int y) {
        assert(in_bounds(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    const T& at(int x, int y) const {
        assert(in_bounds(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    std::span<T> pixels() { return pixels_; }
    std::span<const T> pixels() const { return pixels_; }

    bool operator==(const Image&) const = default;

private:
    static void check_dims(int width, int height) {
        if (width < 1 || height < 1)
            throw InvalidArgument("image dimensions must be at least 1x1");
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> pixels_;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    bool operator==(const Rgb&) const = default;
};

using GrayImage = Image<std::uint8_t>;
using FloatImage = Image<double>;
using RgbImage = Image<Rgb>;

/// Binary grid; used both for object/background masks and edge maps.
class BinaryMap {
public:
    BinaryMap() = default;

    BinaryMap(int width, int height, bool fill = false)
        : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw InvalidArgument("map dimensions must be at least 1x1");
        bits_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return bits_.size(); }

    bool get(int x, int y) const {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }
    void set(int x, int y, bool v) {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0;
    }

    /// Number of set bits.
    std::size_t count() const {
        std::size_t n = 0;
        for (auto b : bits_) n += b;
        return n;
    }

    bool operator==(const BinaryMap&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

using SegmentMask = BinaryMap;
using EdgeMap = BinaryMap;

/// Rounds half up (toward +infinity) and clamps to [0,255].
std::uint8_t round_clamp_u8(double v);

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B), half-up.
GrayImage to_grayscale(const RgbImage& c);

/// Per-pixel 255 - v. Involution.
GrayImage complement(const GrayImage& r);

enum class RescaleMode {
    /// v -> round(min(|v|/4, 255)); data-independent scale sized to the
    /// largest possible 3x3 Sobel response on 8-bit input (4*255).
    ClampAbsQuarter,
    /// Affine map of [min,max] onto [0,255]; constant input maps to 0.
    MinMax,
};

GrayImage rescale_to_u8(const FloatImage& r, RescaleMode mode);

/// Renders a binary map as an 8-bit image (set -> `on`, clear -> `off`).
GrayImage to_gray(const BinaryMap& m, std::uint8_t on = 255, std::uint8_t off = 0);

}  // namespace lipgroove
