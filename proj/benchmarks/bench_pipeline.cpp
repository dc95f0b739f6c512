#include <benchmark/benchmark.h>

#include <random>

#include "lipgroove/features.hpp"
#include "lipgroove/pipeline.hpp"

using namespace lipgroove;

namespace {

GrayImage synthetic_lip(int width, int height) {
    GrayImage img(width, height, std::uint8_t{255});
    int cx = width / 2, cy = height / 2;
    int rx = (width * 13) / 32, ry = (height * 3) / 8;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double ex = static_cast<double>(x - cx) / rx;
            double ey = static_cast<double>(y - cy) / ry;
            double eq = ex * ex + ey * ey;
            if (eq > 1.0) continue;
            std::uint8_t v = 200;
            if (eq <= 0.75 && ((x - cx + 48) % 40 < 8 || (y - cy + 34) % 34 < 6)) v = 30;
            img.at(x, y) = v;
        }
    }
    return img;
}

void BM_Smooth7x7(benchmark::State& state) {
    GrayImage img = synthetic_lip(256, 192);
    Kernel k = gaussian_kernel(7, 1.4);
    for (auto _ : state) {
        GrayImage out = smooth(img, k, 1, BorderPolicy::Replicate);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_Smooth7x7);

void BM_Canny(benchmark::State& state) {
    GrayImage img = synthetic_lip(256, 192);
    CannyParams params;
    for (auto _ : state) {
        EdgeMap edges = canny(img, params, BorderPolicy::Replicate);
        benchmark::DoNotOptimize(edges);
    }
}
BENCHMARK(BM_Canny);

void BM_ExtractGrooves(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    GrayImage img = synthetic_lip(n, (n * 3) / 4);
    for (auto _ : state) {
        GrooveResult result = extract_grooves(img);
        benchmark::DoNotOptimize(result);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_ExtractGrooves)->Arg(128)->Arg(256)->Arg(384)->Complexity();

void BM_MatchScore(benchmark::State& state) {
    std::mt19937 rng(1);
    std::bernoulli_distribution bit(0.2);
    Template a, b;
    a.id = "a";
    b.id = "b";
    a.ratios = b.ratios = LipRatios{0.8, 0.3};
    a.h_map = a.v_map = b.h_map = b.v_map =
        BinaryMap(kTemplateMapWidth, kTemplateMapHeight);
    for (int y = 0; y < kTemplateMapHeight; ++y)
        for (int x = 0; x < kTemplateMapWidth; ++x) {
            a.h_map.set(x, y, bit(rng));
            a.v_map.set(x, y, bit(rng));
            b.h_map.set(x, y, bit(rng));
            b.v_map.set(x, y, bit(rng));
        }
    for (auto _ : state) {
        MatchReport report = match_score(a, b);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_MatchScore);

}  // namespace

BENCHMARK_MAIN();
