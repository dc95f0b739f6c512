#include "support/fixtures.hpp"

#include <algorithm>
#include <deque>

namespace lipgroove::testsupport {

GrayImage make_gray(int w, int h, const std::vector<int>& values) {
    std::vector<std::uint8_t> px(values.begin(), values.end());
    return GrayImage(w, h, std::move(px));
}

FloatImage make_float(int w, int h, const std::vector<double>& values) {
    return FloatImage(w, h, values);
}

GrayImage random_gray(std::mt19937& rng, int w, int h) {
    std::uniform_int_distribution<int> dist(0, 255);
    GrayImage img(w, h);
    for (auto& v : img.pixels()) v = static_cast<std::uint8_t>(dist(rng));
    return img;
}

FloatImage random_float(std::mt19937& rng, int w, int h, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    FloatImage img(w, h);
    for (auto& v : img.pixels()) v = dist(rng);
    return img;
}

GrayImage vertical_step(int w, int h, int split, std::uint8_t lo, std::uint8_t hi) {
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.at(x, y) = x < split ? lo : hi;
    return img;
}

GrayImage horizontal_step(int w, int h, int split, std::uint8_t lo, std::uint8_t hi) {
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            img.at(x, y) = y < split ? lo : hi;
    return img;
}

LipFixture make_lip_fixture(int width, int height) {
    LipFixture fx;
    fx.cx = width / 2;
    fx.cy = height / 2;
    fx.rx = (width * 13) / 32;   // 104 at 256
    fx.ry = (height * 3) / 8;    // 72 at 192
    // Vertical grooves stay clear of the vertical midline so horizontal
    // groove edges remain unbroken where they cross it.
    fx.groove_cols = {fx.cx - 48, fx.cx - 8, fx.cx + 40};
    fx.groove_rows = {fx.cy - 34, fx.cy + 34};

    // The lip level keeps a comfortable margin below the converged
    // threshold (about 210 here) so amplitude-8 noise cannot flip lip
    // pixels into background.
    const std::uint8_t bg = 255, lip = 180, groove = 10;
    const int half_width = 5;  // grooves are 11 px wide

    GrayImage img(width, height, bg);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double ex = static_cast<double>(x - fx.cx) / fx.rx;
            double ey = static_cast<double>(y - fx.cy) / fx.ry;
            double eq = ex * ex + ey * ey;
            if (eq > 1.0) continue;
            std::uint8_t v = lip;
            if (eq <= 0.75) {
                for (int c : fx.groove_cols)
                    if (std::abs(x - c) <= half_width) v = groove;
                for (int r : fx.groove_rows)
                    if (std::abs(y - r) <= half_width) v = groove;
            }
            img.at(x, y) = v;
        }
    }
    fx.image = img;
    return fx;
}

GrayImage add_noise(const GrayImage& img, int amplitude, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-amplitude, amplitude);
    GrayImage out = img;
    for (auto& v : out.pixels())
        v = static_cast<std::uint8_t>(std::clamp(static_cast<int>(v) + dist(rng), 0, 255));
    return out;
}

std::vector<std::vector<std::pair<int, int>>> connected_components(const BinaryMap& map) {
    std::vector<std::vector<std::pair<int, int>>> components;
    BinaryMap seen(map.width(), map.height());
    for (int y = 0; y < map.height(); ++y) {
        for (int x = 0; x < map.width(); ++x) {
            if (!map.get(x, y) || seen.get(x, y)) continue;
            std::vector<std::pair<int, int>> comp;
            std::deque<std::pair<int, int>> queue{{x, y}};
            seen.set(x, y, true);
            while (!queue.empty()) {
                auto [cx, cy] = queue.front();
                queue.pop_front();
                comp.emplace_back(cx, cy);
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || nx >= map.width() || ny < 0 || ny >= map.height())
                            continue;
                        if (map.get(nx, ny) && !seen.get(nx, ny)) {
                            seen.set(nx, ny, true);
                            queue.emplace_back(nx, ny);
                        }
                    }
                }
            }
            components.push_back(std::move(comp));
        }
    }
    return components;
}

int components_intersecting_row(const BinaryMap& map, int row) {
    int n = 0;
    for (const auto& comp : connected_components(map))
        if (std::any_of(comp.begin(), comp.end(),
                        [&](const auto& p) { return p.second == row; }))
            ++n;
    return n;
}

int components_intersecting_col(const BinaryMap& map, int col) {
    int n = 0;
    for (const auto& comp : connected_components(map))
        if (std::any_of(comp.begin(), comp.end(),
                        [&](const auto& p) { return p.first == col; }))
            ++n;
    return n;
}

double edge_change_fraction(const BinaryMap& reference, const BinaryMap& other) {
    std::size_t changed = 0;
    for (int y = 0; y < reference.height(); ++y)
        for (int x = 0; x < reference.width(); ++x)
            changed += reference.get(x, y) != other.get(x, y);
    std::size_t set = reference.count();
    if (set == 0) return changed == 0 ? 0.0 : 1.0;
    return static_cast<double>(changed) / static_cast<double>(set);
}

Template random_template(std::mt19937& rng, std::string id) {
    std::uniform_real_distribution<double> ratio_dist(0.05, 5.0);
    std::bernoulli_distribution bit(std::uniform_real_distribution<double>(0.05, 0.6)(rng));
    Template t;
    t.id = std::move(id);
    t.ratios = LipRatios{ratio_dist(rng), ratio_dist(rng)};
    t.h_map = BinaryMap(kTemplateMapWidth, kTemplateMapHeight);
    t.v_map = BinaryMap(kTemplateMapWidth, kTemplateMapHeight);
    for (int y = 0; y < kTemplateMapHeight; ++y) {
        for (int x = 0; x < kTemplateMapWidth; ++x) {
            t.h_map.set(x, y, bit(rng));
            t.v_map.set(x, y, bit(rng));
        }
    }
    t.source_width = 256;
    t.source_height = 192;
    return t;
}

}  // namespace lipgroove::testsupport
