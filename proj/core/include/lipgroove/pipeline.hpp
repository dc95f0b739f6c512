#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lipgroove/edge.hpp"
#include "lipgroove/threshold.hpp"

namespace lipgroove {

struct PipelineConfig {
    double epsilon = 1.0;       ///< threshold convergence bound
    int smooth_size = 7;        ///< pre/mid smoothing kernel size
    double smooth_sigma = 1.4;  ///< pre/mid smoothing sigma
    int pre_passes = 4;         ///< smoothing passes before the first Sobel
    int mid_passes = 1;         ///< smoothing passes between Sobel stages
    BorderPolicy border = BorderPolicy::Replicate;
    /// The final Canny runs on twice-rescaled Sobel output, where gradient
    /// magnitudes top out near 45 even for maximal-contrast input, so the
    /// pipeline defaults to lower thresholds than bare canny().
    CannyParams canny{1.0, 5, 14.0, 20.0};
    RescaleMode sobel_rescale = RescaleMode::ClampAbsQuarter;
    /// Swap which 3x3 mask the "horizontal"/"vertical" tracks apply.
    bool swap_sobel_naming = false;
    bool dump_stages = false;
};

/// Output of the groove pipeline. When stage dumps are enabled, `stages`
/// holds the 14 intermediate images in order, keyed "a".."n":
///   a grayscale input          b background blackened
///   c first smoothing pass     d fully smoothed
///   e/f first Sobel (h/v)      g/h re-smoothed
///   i/j second Sobel           k/l complements
///   m/n final edge maps
struct GrooveResult {
    EdgeMap horizontal;
    EdgeMap vertical;
    SegmentMask mask;
    ThresholdTrace trace;
    std::vector<std::pair<std::string, GrayImage>> stages;
};

GrooveResult extract_grooves(const GrayImage& input, const PipelineConfig& cfg = {});
GrooveResult extract_grooves(const RgbImage& input, const PipelineConfig& cfg = {});

/// Stage snapshot by key, or nullptr when absent.
const GrayImage* find_stage(const GrooveResult& result, std::string_view key);

/// Writes each captured stage to `<dir>/stage_<key>.pgm`.
void write_stage_dumps(const GrooveResult& result, const std::filesystem::path& dir);

}  // namespace lipgroove
