#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lipgroove/features.hpp"
#include "lipgroove/raster.hpp"

namespace lipgroove::testsupport {

GrayImage make_gray(int w, int h, const std::vector<int>& values);
FloatImage make_float(int w, int h, const std::vector<double>& values);

GrayImage random_gray(std::mt19937& rng, int w, int h);
FloatImage random_float(std::mt19937& rng, int w, int h, double lo, double hi);

template <typename T>
Image<T> transpose(const Image<T>& in) {
    Image<T> out(in.height(), in.width());
    for (int y = 0; y < in.height(); ++y)
        for (int x = 0; x < in.width(); ++x)
            out.at(y, x) = in.at(x, y);
    return out;
}

template <typename T>
Image<T> mirror_horizontal(const Image<T>& in) {
    Image<T> out(in.width(), in.height());
    for (int y = 0; y < in.height(); ++y)
        for (int x = 0; x < in.width(); ++x)
            out.at(in.width() - 1 - x, y) = in.at(x, y);
    return out;
}

/// Columns [0, split) = lo, [split, w) = hi.
GrayImage vertical_step(int w, int h, int split, std::uint8_t lo, std::uint8_t hi);
/// Rows [0, split) = lo, [split, h) = hi.
GrayImage horizontal_step(int w, int h, int split, std::uint8_t lo, std::uint8_t hi);

/// Synthetic lip print: dark ellipse on white ground, ruled with vertical
/// and horizontal grooves at known positions.
struct LipFixture {
    GrayImage image;
    std::vector<int> groove_cols;  ///< x centers of the vertical grooves
    std::vector<int> groove_rows;  ///< y centers of the horizontal grooves
    int cx = 0, cy = 0, rx = 0, ry = 0;
};

LipFixture make_lip_fixture(int width = 256, int height = 192);

/// Adds i.i.d. uniform noise in [-amplitude, amplitude], clamped to [0,255].
GrayImage add_noise(const GrayImage& img, int amplitude, std::uint32_t seed);

/// 8-connected components of the set pixels.
std::vector<std::vector<std::pair<int, int>>> connected_components(const BinaryMap& map);

int components_intersecting_row(const BinaryMap& map, int row);
int components_intersecting_col(const BinaryMap& map, int col);

/// Fraction of differing edge pixels relative to the reference map's set count.
double edge_change_fraction(const BinaryMap& reference, const BinaryMap& other);

Template random_template(std::mt19937& rng, std::string id);

}  // namespace lipgroove::testsupport
