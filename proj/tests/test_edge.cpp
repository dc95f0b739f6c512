#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lipgroove/edge.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lipgroove;
using namespace lipgroove::testsupport;

namespace {

// Columns 0-1 = 0, columns 2-4 = 255.
GrayImage step5() { return vertical_step(5, 5, 2, 0, 255); }

}  // namespace

TEST_CASE("sobel_vertical responds to vertical structure only") {
    GrayImage flat(6, 6, std::uint8_t{99});
    FloatImage flat_gx = sobel_vertical(flat, BorderPolicy::Replicate);
    for (double v : flat_gx.pixels()) CHECK(v == 0.0);

    FloatImage gx = sobel_vertical(step5(), BorderPolicy::Replicate);
    for (int y = 0; y < 5; ++y) {
        CHECK(gx.at(2, y) == 1020.0);  // 255 * (1 + 2 + 1)
        CHECK(gx.at(1, y) == 1020.0);
        CHECK(gx.at(0, y) == 0.0);
        CHECK(gx.at(3, y) == 0.0);
        CHECK(gx.at(4, y) == 0.0);
    }

    GrayImage hstep = horizontal_step(5, 5, 2, 0, 255);
    FloatImage hstep_gx = sobel_vertical(hstep, BorderPolicy::Replicate);
    for (double v : hstep_gx.pixels())
        CHECK(v == 0.0);  // Gx is blind to horizontal edges
}

TEST_CASE("sobel_horizontal responds to horizontal structure only") {
    GrayImage flat(6, 6, std::uint8_t{50});
    FloatImage flat_gy = sobel_horizontal(flat, BorderPolicy::Replicate);
    for (double v : flat_gy.pixels()) CHECK(v == 0.0);

    GrayImage hstep = horizontal_step(5, 5, 2, 0, 255);
    FloatImage gy = sobel_horizontal(hstep, BorderPolicy::Replicate);
    for (int x = 0; x < 5; ++x) {
        CHECK(gy.at(x, 2) == 1020.0);
        CHECK(gy.at(x, 1) == 1020.0);
        CHECK(gy.at(x, 0) == 0.0);
        CHECK(gy.at(x, 3) == 0.0);
    }
}

TEST_CASE("sobel operators are transpose duals") {
    std::mt19937 rng(606);
    for (int i = 0; i < 20; ++i) {
        GrayImage img = random_gray(rng, 2 + static_cast<int>(rng() % 12),
                                    2 + static_cast<int>(rng() % 12));
        FloatImage lhs = sobel_horizontal(img, BorderPolicy::Replicate);
        FloatImage rhs = transpose(sobel_vertical(transpose(img), BorderPolicy::Replicate));
        CHECK(lhs == rhs);  // integer-valued sums: bit-exact
    }
}

TEST_CASE("sobel responses are bounded by 4*255") {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        GrayImage img = random_gray(rng, 8, 8);
        FloatImage gx = sobel_vertical(img, BorderPolicy::Replicate);
        for (double v : gx.pixels()) CHECK(std::abs(v) <= 1020.0);
        FloatImage gy = sobel_horizontal(img, BorderPolicy::Zero);
        for (double v : gy.pixels()) CHECK(std::abs(v) <= 1020.0);
    }
}

TEST_CASE("gradient combines the Sobel pair") {
    GrayImage flat(5, 5, std::uint8_t{10});
    GradientField g = gradient(flat, BorderPolicy::Replicate);
    for (double v : g.magnitude.pixels()) CHECK(v == 0.0);

    GradientField step = gradient(step5(), BorderPolicy::Replicate);
    for (int y = 0; y < 5; ++y) {
        CHECK(step.magnitude.at(2, y) == 1020.0);
        double d = step.direction.at(2, y);
        CHECK((std::abs(d) < 1e-12 || std::abs(std::abs(d) - std::numbers::pi) < 1e-12));
    }

    // Diagonal step: brighter where x >= y, gradient at 45 degrees.
    GrayImage diag(5, 5);
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 5; ++x)
            diag.at(x, y) = x >= y ? 255 : 0;
    GradientField gd = gradient(diag, BorderPolicy::Replicate);
    CHECK(std::abs(std::abs(gd.direction.at(2, 2)) - std::numbers::pi / 4) < 1e-6);
    CHECK(gd.magnitude.at(2, 2) > 0.0);
}

TEST_CASE("direction stays in (-pi, pi]") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 10; ++i) {
        GrayImage img = random_gray(rng, 9, 9);
        GradientField g = gradient(img, BorderPolicy::Replicate);
        for (double d : g.direction.pixels()) {
            CHECK(d > -std::numbers::pi);
            CHECK(d <= std::numbers::pi);
        }
    }
}

TEST_CASE("non_max_suppression keeps isolated peaks and thins ridges") {
    GradientField zero{FloatImage(5, 5, 0.0), FloatImage(5, 5, 0.0)};
    FloatImage suppressed = non_max_suppression(zero);
    for (double v : suppressed.pixels()) CHECK(v == 0.0);

    GradientField peak{FloatImage(5, 5, 0.0), FloatImage(5, 5, 0.0)};
    peak.magnitude.at(2, 2) = 9.0;
    FloatImage kept = non_max_suppression(peak);
    CHECK(kept.at(2, 2) == 9.0);
    CHECK(kept.at(1, 2) == 0.0);

    // Grid-aligned step ties two columns; exactly one survives per row.
    GradientField step = gradient(smooth(vertical_step(9, 7, 4, 0, 255),
                                         gaussian_kernel(5, 1.0), 1,
                                         BorderPolicy::Replicate),
                                  BorderPolicy::Replicate);
    FloatImage nms = non_max_suppression(step);
    for (int y = 1; y < 6; ++y) {
        int survivors = 0;
        for (int x = 0; x < 9; ++x)
            if (nms.at(x, y) > 0.0) ++survivors;
        CHECK(survivors == 1);
    }
}

TEST_CASE("non_max_suppression matches the exhaustive oracle on the step fixture") {
    GradientField g = gradient(smooth(vertical_step(9, 7, 4, 0, 255),
                                      gaussian_kernel(5, 1.0), 1, BorderPolicy::Replicate),
                               BorderPolicy::Replicate);
    CHECK(non_max_suppression(g) == naive_non_max_suppression(g));
}

TEST_CASE("non_max_suppression output is dominated by its input") {
    std::mt19937 rng(404);
    FloatImage gx = random_float(rng, 10, 10, -100.0, 100.0);
    FloatImage gy = random_float(rng, 10, 10, -100.0, 100.0);
    GradientField g{FloatImage(10, 10), FloatImage(10, 10)};
    for (int i = 0; i < 100; ++i) {
        g.magnitude.pixels()[i] = std::hypot(gx.pixels()[i], gy.pixels()[i]);
        g.direction.pixels()[i] = std::atan2(gy.pixels()[i], gx.pixels()[i]);
    }
    FloatImage out = non_max_suppression(g);
    for (int i = 0; i < 100; ++i) {
        CHECK(out.pixels()[i] <= g.magnitude.pixels()[i]);
        if (out.pixels()[i] != 0.0) CHECK(g.magnitude.pixels()[i] != 0.0);
    }
}

TEST_CASE("hysteresis thresholds with 8-connected weak chaining") {
    FloatImage cold(4, 4, 5.0);
    CHECK(hysteresis(cold, 10.0, 20.0).count() == 0);

    FloatImage hot(4, 4, 50.0);
    CHECK(hysteresis(hot, 10.0, 20.0).count() == 16);

    // Strong seed at (2,2); weak path (2,3),(2,4); isolated weak at (0,0).
    FloatImage field(5, 5, 0.0);
    field.at(2, 2) = 30.0;
    field.at(2, 3) = 12.0;
    field.at(2, 4) = 12.0;
    field.at(0, 0) = 12.0;
    EdgeMap edges = hysteresis(field, 10.0, 20.0);
    CHECK(edges.get(2, 2));
    CHECK(edges.get(2, 3));
    CHECK(edges.get(2, 4));
    CHECK_FALSE(edges.get(0, 0));
    CHECK(edges == naive_hysteresis(field, 10.0, 20.0));

    CHECK_THROWS_AS(hysteresis(field, 20.0, 10.0), InvalidArgument);
    CHECK_THROWS_AS(hysteresis(field, 15.0, 15.0), InvalidArgument);
    CHECK_THROWS_AS(hysteresis(field, 0.0, 15.0), InvalidArgument);
}

TEST_CASE("lowering either hysteresis threshold never removes edges") {
    std::mt19937 rng(7007);
    for (int i = 0; i < 20; ++i) {
        FloatImage field = random_float(rng, 12, 12, 0.0, 100.0);
        EdgeMap base = hysteresis(field, 20.0, 50.0);
        EdgeMap low_low = hysteresis(field, 10.0, 50.0);
        EdgeMap low_high = hysteresis(field, 20.0, 30.0);
        for (int y = 0; y < 12; ++y) {
            for (int x = 0; x < 12; ++x) {
                if (base.get(x, y)) {
                    CHECK(low_low.get(x, y));
                    CHECK(low_high.get(x, y));
                }
            }
        }
    }
}

TEST_CASE("canny finds nothing on constants and a 1-px line on a clean step") {
    CannyParams params;
    CHECK(canny(GrayImage(16, 16, std::uint8_t{180}), params, BorderPolicy::Replicate)
              .count() == 0);

    GrayImage step = vertical_step(17, 11, 8, 0, 255);
    EdgeMap edges = canny(step, params, BorderPolicy::Replicate);
    CHECK(edges.count() > 0);
    for (int y = 1; y < 10; ++y) {
        int thickness = 0;
        for (int x = 0; x < 17; ++x)
            if (edges.get(x, y)) ++thickness;
        CHECK(thickness == 1);
    }

    EdgeMap again = canny(step, params, BorderPolicy::Replicate);
    CHECK(again == edges);
}

TEST_CASE("canny validates its parameters") {
    GrayImage img(8, 8, std::uint8_t{0});
    CannyParams bad_sigma{0.0, 5, 20.0, 50.0};
    CHECK_THROWS_AS(canny(img, bad_sigma, BorderPolicy::Replicate), InvalidArgument);
    CannyParams bad_thresholds{1.0, 5, 50.0, 20.0};
    CHECK_THROWS_AS(canny(img, bad_thresholds, BorderPolicy::Replicate), InvalidArgument);
}
