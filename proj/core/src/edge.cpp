#include "lipgroove/edge.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace lipgroove {

namespace {

const Kernel& sobel_gx() {
    static const Kernel k(3, {-1, 0, 1, -2, 0, 2, -1, 0, 1});
    return k;
}

const Kernel& sobel_gy() {
    static const Kernel k(3, {-1, -2, -1, 0, 0, 0, 1, 2, 1});
    return k;
}

double mag_at(const FloatImage& m, int x, int y) {
    return m.in_bounds(x, y) ? m.at(x, y) : 0.0;
}

}  // namespace

FloatImage sobel_vertical(const GrayImage& r, BorderPolicy border) {
    return convolve(r, sobel_gx(), border);
}

FloatImage sobel_horizontal(const GrayImage& r, BorderPolicy border) {
    return convolve(r, sobel_gy(), border);
}

GradientField gradient(const GrayImage& r, BorderPolicy border) {
    FloatImage gx = sobel_vertical(r, border);
    FloatImage gy = sobel_horizontal(r, border);
    GradientField g{FloatImage(r.width(), r.height()), FloatImage(r.width(), r.height())};
    auto px = gx.pixels();
    auto py = gy.pixels();
    auto pm = g.magnitude.pixels();
    auto pd = g.direction.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        pm[i] = std::sqrt(px[i] * px[i] + py[i] * py[i]);
        double d = std::atan2(py[i], px[i]);
        if (d == -std::numbers::pi) d = std::numbers::pi;
        pd[i] = d;
    }
    return g;
}

FloatImage non_max_suppression(const GradientField& g) {
    const FloatImage& mag = g.magnitude;
    const FloatImage& dir = g.direction;
    if (mag.width() != dir.width() || mag.height() != dir.height())
        throw DimensionMismatch("non_max_suppression: field dimensions differ");

    // Forward/backward offsets per quantized bin: 0, 45, 90, 135 degrees.
    static constexpr int fwd[4][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};
    static constexpr int bwd[4][2] = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

    FloatImage out(mag.width(), mag.height());
    for (int y = 0; y < mag.height(); ++y) {
        for (int x = 0; x < mag.width(); ++x) {
            double m = mag.at(x, y);
            if (m <= 0.0) {
                out.at(x, y) = 0.0;
                continue;
            }
            double deg = dir.at(x, y) * (180.0 / std::numbers::pi);
            double folded = std::fmod(deg, 180.0);
            if (folded < 0.0) folded += 180.0;
            int bin = static_cast<int>(std::lround(folded / 45.0)) % 4;
            double mf = mag_at(mag, x + fwd[bin][0], y + fwd[bin][1]);
            double mb = mag_at(mag, x + bwd[bin][0], y + bwd[bin][1]);
            out.at(x, y) = (m > mb && m >= mf) ? m : 0.0;
        }
    }
    return out;
}

EdgeMap hysteresis(const FloatImage& nms, double low, double high) {
    if (!(low > 0.0) || !(low < high))
        throw InvalidArgument("hysteresis: thresholds must satisfy 0 < low < high");

    const int w = nms.width(), h = nms.height();
    EdgeMap edges(w, h);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (nms.at(x, y) >= high && !edges.get(x, y)) {
                edges.set(x, y, true);
                stack.emplace_back(x, y);
                while (!stack.empty()) {
                    auto [cx, cy] = stack.back();
                    stack.pop_back();
                    for (int dy = -1; dy <= 1; ++dy) {
                        for (int dx = -1; dx <= 1; ++dx) {
                            int nx = cx + dx, ny = cy + dy;
                            if (!nms.in_bounds(nx, ny) || edges.get(nx, ny)) continue;
                            if (nms.at(nx, ny) >= low) {
                                edges.set(nx, ny, true);
                                stack.emplace_back(nx, ny);
                            }
                        }
                    }
                }
            }
        }
    }
    return edges;
}

EdgeMap canny(const GrayImage& r, const CannyParams& params, BorderPolicy border) {
    GrayImage blurred =
        smooth(r, gaussian_kernel(params.kernel_size, params.sigma), 1, border);
    return hysteresis(non_max_suppression(gradient(blurred, border)),
                      params.low, params.high);
}

}  // namespace lipgroove
