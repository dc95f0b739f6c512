#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipgroove/pipeline.hpp"
#include "lipgroove/raster.hpp"

namespace lipgroove {

/// Inclusive pixel-index box.
struct BoundingBox {
    int top = 0;
    int left = 0;
    int bottom = 0;
    int right = 0;

    int width() const { return right - left + 1; }
    int height() const { return bottom - top + 1; }

    bool operator==(const BoundingBox&) const = default;
};

struct LipRatios {
    double upper_lower_height_ratio = 0.0;  ///< upper height / lower height
    double upper_height_width_ratio = 0.0;  ///< upper height / box width
};

/// Where the mouth line splits the box: the row with the fewest object
/// pixels within the central 50% of the box (ties -> topmost). Heights
/// count the rows strictly above/below that line, so
/// upper_height + lower_height == box bottom - box top.
struct LipSplit {
    int mouth_row = 0;
    int upper_height = 0;
    int lower_height = 0;
};

inline constexpr int kTemplateMapWidth = 128;
inline constexpr int kTemplateMapHeight = 64;

/// One enrolled identity: the two statistical ratios plus groove maps
/// normalized to 128x64.
struct Template {
    std::string id;
    LipRatios ratios;
    BinaryMap h_map;
    BinaryMap v_map;
    int source_width = 0;
    int source_height = 0;
};

struct MatchConfig {
    double ratio_tol = 0.15;  ///< ratio gate: max per-ratio distance
    double accept = 0.60;     ///< groove score acceptance floor
};

struct MatchReport {
    bool ratio_gate_passed = false;
    double ratio_distance = 0.0;
    double groove_score = 0.0;  ///< mean Jaccard of the two map pairs, in [0,1]
    bool accepted = false;
};

/// Tightest box containing all object pixels; NoObjectError when empty.
BoundingBox bounding_box(const SegmentMask& m);

LipSplit split_lips(const SegmentMask& m, const BoundingBox& box);

LipRatios compute_ratios(const SegmentMask& m);

/// Crops the groove maps to the mask's bounding box, resamples to 128x64
/// with nearest-neighbor (integer arithmetic, reproducible bit-exactly),
/// and attaches the ratios.
Template build_template(std::string id, const GrooveResult& grooves);

MatchReport match_score(const Template& a, const Template& b,
                        const MatchConfig& cfg = {});

/// Best accepted gallery entry by groove score; ties resolved toward the
/// lexicographically smallest id, so the result is independent of gallery
/// order. Empty optional when nothing is accepted.
std::optional<std::pair<std::string, MatchReport>> identify(
    const Template& probe, const std::vector<Template>& gallery,
    const MatchConfig& cfg = {});

}  // namespace lipgroove
