#include "lipgroove/pipeline.hpp"

#include "lipgroove/pnm.hpp"

namespace lipgroove {

namespace {

void validate(const PipelineConfig& cfg) {
    if (cfg.pre_passes < 1)
        throw InvalidArgument("pipeline: pre_passes must be >= 1");
    if (cfg.mid_passes < 0)
        throw InvalidArgument("pipeline: mid_passes must be >= 0");
}

// Runs one stage, tagging any failure with the stage label.
template <typename Fn>
auto stage(const char* label, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& ex) {
        throw Error(std::string("stage ") + label + ": " + ex.what());
    }
}

}  // namespace

GrooveResult extract_grooves(const GrayImage& input, const PipelineConfig& cfg) {
    validate(cfg);
    GrooveResult result;
    auto keep = [&](const char* key, const GrayImage& img) {
        if (cfg.dump_stages) result.stages.emplace_back(key, img);
    };

    const GrayImage& a = input;
    keep("a", a);

    result.trace = stage("b", [&] { return iterative_threshold(a, cfg.epsilon); });
    result.mask = stage("b", [&] { return segment(a, result.trace.final); });
    GrayImage b = stage("b", [&] { return blacken_background(a, result.mask); });
    keep("b", b);

    Kernel kernel = gaussian_kernel(cfg.smooth_size, cfg.smooth_sigma);
    GrayImage c = stage("c", [&] { return smooth(b, kernel, 1, cfg.border); });
    keep("c", c);
    GrayImage d = cfg.pre_passes == 1
                      ? c
                      : stage("d", [&] { return smooth(c, kernel, cfg.pre_passes - 1, cfg.border); });
    keep("d", d);

    auto sobel_h = cfg.swap_sobel_naming ? sobel_vertical : sobel_horizontal;
    auto sobel_v = cfg.swap_sobel_naming ? sobel_horizontal : sobel_vertical;

    GrayImage e = stage("e", [&] { return rescale_to_u8(sobel_h(d, cfg.border), cfg.sobel_rescale); });
    GrayImage f = stage("f", [&] { return rescale_to_u8(sobel_v(d, cfg.border), cfg.sobel_rescale); });
    keep("e", e);
    keep("f", f);

    GrayImage g = cfg.mid_passes == 0
                      ? e
                      : stage("g", [&] { return smooth(e, kernel, cfg.mid_passes, cfg.border); });
    GrayImage h = cfg.mid_passes == 0
                      ? f
                      : stage("h", [&] { return smooth(f, kernel, cfg.mid_passes, cfg.border); });
    keep("g", g);
    keep("h", h);

    GrayImage i = stage("i", [&] { return rescale_to_u8(sobel_h(g, cfg.border), cfg.sobel_rescale); });
    GrayImage j = stage("j", [&] { return rescale_to_u8(sobel_v(h, cfg.border), cfg.sobel_rescale); });
    keep("i", i);
    keep("j", j);

    GrayImage k = stage("k", [&] { return lipgroove::complement(i); });
    GrayImage l = stage("l", [&] { return lipgroove::complement(j); });
    keep("k", k);
    keep("l", l);

    result.horizontal = stage("m", [&] { return canny(k, cfg.canny, cfg.border); });
    result.vertical = stage("n", [&] { return canny(l, cfg.canny, cfg.border); });
    keep("m", to_gray(result.horizontal));
    keep("n", to_gray(result.vertical));

    return result;
}

GrooveResult extract_grooves(const RgbImage& input, const PipelineConfig& cfg) {
    return extract_grooves(to_grayscale(input), cfg);
}

const GrayImage* find_stage(const GrooveResult& result, std::string_view key) {
    for (const auto& [k, img] : result.stages)
        if (k == key) return &img;
    return nullptr;
}

void write_stage_dumps(const GrooveResult& result, const std::filesystem::path& dir) {
    for (const auto& [key, img] : result.stages)
        save_pgm_file(img, dir / ("stage_" + key + ".pgm"));
}

}  // namespace lipgroove
