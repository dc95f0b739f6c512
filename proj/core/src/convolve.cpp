#include "lipgroove/convolve.hpp"

#include <algorithm>
#include <cmath>

namespace lipgroove {

Kernel::Kernel(int size, std::vector<double> weights)
    : size_(size), weights_(std::move(weights)) {
    if (size < 1 || size % 2 == 0)
        throw InvalidArgument("kernel size must be odd and positive");
    if (weights_.size() != static_cast<std::size_t>(size) * size)
        throw InvalidArgument("kernel weight count does not match size");
    for (double w : weights_)
        if (!std::isfinite(w))
            throw InvalidArgument("kernel weights must be finite");
}

Kernel gaussian_kernel(int size, double sigma) {
    if (size < 3 || size % 2 == 0)
        throw InvalidArgument("gaussian kernel size must be odd and >= 3");
    if (!(sigma > 0.0))
        throw InvalidArgument("gaussian sigma must be positive");
    int r = size / 2;
    std::vector<double> w(static_cast<std::size_t>(size) * size);
    double sum = 0.0;
    for (int y = -r; y <= r; ++y) {
        for (int x = -r; x <= r; ++x) {
            double v = std::exp(-(x * x + y * y) / (2.0 * sigma * sigma));
            w[static_cast<std::size_t>(y + r) * size + (x + r)] = v;
            sum += v;
        }
    }
    for (double& v : w) v /= sum;
    return Kernel(size, std::move(w));
}

namespace {

template <typename T>
double fetch(const Image<T>& in, int x, int y, BorderPolicy border) {
    if (in.in_bounds(x, y)) return static_cast<double>(in.at(x, y));
    if (border == BorderPolicy::Zero) return 0.0;
    x = std::clamp(x, 0, in.width() - 1);
    y = std::clamp(y, 0, in.height() - 1);
    return static_cast<double>(in.at(x, y));
}

template <typename T>
FloatImage convolve_impl(const Image<T>& in, const Kernel& k, BorderPolicy border) {
    if (in.empty())
        throw InvalidArgument("convolve: empty raster");
    const int r = k.radius();
    FloatImage out(in.width(), in.height());
    for (int y = 0; y < in.height(); ++y) {
        for (int x = 0; x < in.width(); ++x) {
            double acc = 0.0;
            for (int ky = 0; ky < k.size(); ++ky)
                for (int kx = 0; kx < k.size(); ++kx)
                    acc += k.at(kx, ky) * fetch(in, x + kx - r, y + ky - r, border);
            out.at(x, y) = acc;
        }
    }
    return out;
}

}  // namespace

FloatImage convolve(const GrayImage& r, const Kernel& k, BorderPolicy border) {
    return convolve_impl(r, k, border);
}

FloatImage convolve(const FloatImage& r, const Kernel& k, BorderPolicy border) {
    return convolve_impl(r, k, border);
}

GrayImage smooth(const GrayImage& r, const Kernel& k, int passes, BorderPolicy border) {
    if (passes < 1)
        throw InvalidArgument("smooth: passes must be >= 1");
    GrayImage img = r;
    for (int p = 0; p < passes; ++p) {
        FloatImage f = convolve(img, k, border);
        auto src = f.pixels();
        auto dst = img.pixels();
        for (std::size_t i = 0; i < src.size(); ++i)
            dst[i] = round_clamp_u8(src[i]);
    }
    return img;
}

}  // namespace lipgroove
