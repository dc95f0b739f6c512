#pragma once

#include <vector>

#include "lipgroove/raster.hpp"

namespace lipgroove {

/// Odd-sized square mask of real weights, row-major.
class Kernel {
public:
    Kernel(int size, std::vector<double> weights);

    int size() const { return size_; }
    int radius() const { return size_ / 2; }

    /// Entry at column kx, row ky (both in [0, size)).
    double at(int kx, int ky) const {
        return weights_[static_cast<std::size_t>(ky) * size_ + kx];
    }

    const std::vector<double>& weights() const { return weights_; }

private:
    int size_;
    std::vector<double> weights_;
};

/// Out-of-bounds reads during convolution.
enum class BorderPolicy {
    Replicate,  ///< clamp coordinates to the nearest edge pixel
    Zero,       ///< read 0
};

/// w(x,y) = exp(-(x^2+y^2)/(2 sigma^2)) over the size x size grid,
/// normalized so the weights sum to 1. size must be odd and >= 3.
Kernel gaussian_kernel(int size, double sigma);

/// Applies the mask in correlation orientation:
///   out(x,y) = sum_{kx,ky} k(kx,ky) * in(x+kx-r, y+ky-r)
/// i.e. masks act exactly as written, unflipped. Output dimensions equal
/// input dimensions; border reads resolved by `border`.
FloatImage convolve(const GrayImage& r, const Kernel& k, BorderPolicy border);
FloatImage convolve(const FloatImage& r, const Kernel& k, BorderPolicy border);

/// Repeated filtering: each pass convolves and then rounds back to 8 bits
/// (half-up, clamped), and the next pass consumes the rounded result.
GrayImage smooth(const GrayImage& r, const Kernel& k, int passes, BorderPolicy border);

}  // namespace lipgroove
