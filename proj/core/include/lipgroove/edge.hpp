#pragma once

#include "lipgroove/convolve.hpp"
#include "lipgroove/raster.hpp"

namespace lipgroove {

struct GradientField {
    FloatImage magnitude;  ///< sqrt(gx^2 + gy^2), >= 0
    FloatImage direction;  ///< atan2(gy, gx), radians in (-pi, pi]
};

/// Canny stage parameters. Thresholds are on the gradient-magnitude scale
/// of 8-bit inputs.
struct CannyParams {
    double sigma = 1.0;
    int kernel_size = 5;
    double low = 20.0;
    double high = 50.0;
};

/// Correlation with Gx = [[-1,0,1],[-2,0,2],[-1,0,1]] (x increasing
/// rightward): the detector of vertical structures.
FloatImage sobel_vertical(const GrayImage& r, BorderPolicy border);

/// Correlation with Gy = Gx transposed = [[-1,-2,-1],[0,0,0],[1,2,1]]:
/// the detector of horizontal structures.
FloatImage sobel_horizontal(const GrayImage& r, BorderPolicy border);

GradientField gradient(const GrayImage& r, BorderPolicy border);

/// Direction is quantized to 4 bins (0/45/90/135 degrees after folding
/// modulo 180); a pixel survives iff its magnitude is strictly greater
/// than the backward neighbor and at least the forward neighbor along the
/// quantized direction (out-of-bounds neighbors read 0). The strict side
/// keeps ridges one pixel wide when two neighbors tie exactly, as happens
/// on a grid-aligned step. Suppressed pixels become 0; survivors keep
/// their magnitude.
FloatImage non_max_suppression(const GradientField& g);

/// Double thresholding: pixels >= high seed edges; pixels in [low, high)
/// join iff 8-connected (transitively) to a seed. Traversal-order
/// independent. Requires 0 < low < high.
EdgeMap hysteresis(const FloatImage& nms, double low, double high);

/// Gaussian smoothing -> gradient -> non-maximum suppression ->
/// hysteresis, as one deterministic composition.
EdgeMap canny(const GrayImage& r, const CannyParams& params, BorderPolicy border);

}  // namespace lipgroove
