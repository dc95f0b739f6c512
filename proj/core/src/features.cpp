#include "lipgroove/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>

namespace lipgroove {

namespace {

int object_count_in_row(const SegmentMask& m, int y, int left, int right) {
    int n = 0;
    for (int x = left; x <= right; ++x)
        if (m.get(x, y)) ++n;
    return n;
}

void validate_id(const std::string& id) {
    if (id.empty())
        throw InvalidIdError("template id must be non-empty");
    for (unsigned char c : id)
        if (std::iscntrl(c))
            throw InvalidIdError("template id must not contain control characters");
}

BinaryMap resample_nearest(const EdgeMap& src, const BoundingBox& box,
                           int dst_w, int dst_h) {
    BinaryMap dst(dst_w, dst_h);
    const std::int64_t src_w = box.width();
    const std::int64_t src_h = box.height();
    for (int ty = 0; ty < dst_h; ++ty) {
        int sy = static_cast<int>((2 * static_cast<std::int64_t>(ty) + 1) * src_h /
                                  (2 * static_cast<std::int64_t>(dst_h)));
        for (int tx = 0; tx < dst_w; ++tx) {
            int sx = static_cast<int>((2 * static_cast<std::int64_t>(tx) + 1) * src_w /
                                      (2 * static_cast<std::int64_t>(dst_w)));
            dst.set(tx, ty, src.get(box.left + sx, box.top + sy));
        }
    }
    return dst;
}

double jaccard(const BinaryMap& a, const BinaryMap& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionMismatch("jaccard: map dimensions differ");
    std::size_t inter = 0, uni = 0;
    for (int y = 0; y < a.height(); ++y) {
        for (int x = 0; x < a.width(); ++x) {
            bool va = a.get(x, y), vb = b.get(x, y);
            inter += va && vb;
            uni += va || vb;
        }
    }
    if (uni == 0) return 1.0;  // two empty maps count as identical
    return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

BoundingBox bounding_box(const SegmentMask& m) {
    BoundingBox box{m.height(), m.width(), -1, -1};
    for (int y = 0; y < m.height(); ++y) {
        for (int x = 0; x < m.width(); ++x) {
            if (!m.get(x, y)) continue;
            box.top = std::min(box.top, y);
            box.left = std::min(box.left, x);
            box.bottom = std::max(box.bottom, y);
            box.right = std::max(box.right, x);
        }
    }
    if (box.bottom < 0)
        throw NoObjectError("mask contains no object pixels");
    return box;
}

LipSplit split_lips(const SegmentMask& m, const BoundingBox& box) {
    if (box.top < 0 || box.left < 0 || box.bottom >= m.height() ||
        box.right >= m.width() || box.top > box.bottom || box.left > box.right)
        throw InvalidArgument("split_lips: box out of mask bounds");
    if (box.height() < 3)
        throw InvalidArgument("split_lips: box height must be >= 3");

    const int span = box.bottom - box.top;
    const int lo = box.top + span / 4;
    const int hi = box.top + (3 * span) / 4;

    int mouth_row = lo;
    int best = std::numeric_limits<int>::max();
    for (int y = lo; y <= hi; ++y) {
        int n = object_count_in_row(m, y, box.left, box.right);
        if (n < best) {
            best = n;
            mouth_row = y;
        }
    }
    return LipSplit{mouth_row, mouth_row - box.top, box.bottom - mouth_row};
}

LipRatios compute_ratios(const SegmentMask& m) {
    BoundingBox box = bounding_box(m);
    LipSplit split = split_lips(m, box);
    if (split.upper_height <= 0 || split.lower_height <= 0)
        throw DegenerateLipError("upper or lower lip height is zero");
    return LipRatios{
        static_cast<double>(split.upper_height) / split.lower_height,
        static_cast<double>(split.upper_height) / box.width(),
    };
}

Template build_template(std::string id, const GrooveResult& grooves) {
    validate_id(id);
    if (grooves.horizontal.width() != grooves.mask.width() ||
        grooves.horizontal.height() != grooves.mask.height() ||
        grooves.vertical.width() != grooves.mask.width() ||
        grooves.vertical.height() != grooves.mask.height())
        throw DimensionMismatch("build_template: groove maps and mask disagree");

    BoundingBox box = bounding_box(grooves.mask);
    LipRatios ratios = compute_ratios(grooves.mask);
    Template t;
    t.id = std::move(id);
    t.ratios = ratios;
    t.h_map = resample_nearest(grooves.horizontal, box, kTemplateMapWidth, kTemplateMapHeight);
    t.v_map = resample_nearest(grooves.vertical, box, kTemplateMapWidth, kTemplateMapHeight);
    t.source_width = grooves.mask.width();
    t.source_height = grooves.mask.height();
    return t;
}

MatchReport match_score(const Template& a, const Template& b, const MatchConfig& cfg) {
    MatchReport report;
    report.ratio_distance = std::max(
        std::abs(a.ratios.upper_lower_height_ratio - b.ratios.upper_lower_height_ratio),
        std::abs(a.ratios.upper_height_width_ratio - b.ratios.upper_height_width_ratio));
    report.ratio_gate_passed = report.ratio_distance <= cfg.ratio_tol;
    report.groove_score = (jaccard(a.h_map, b.h_map) + jaccard(a.v_map, b.v_map)) / 2.0;
    report.accepted = report.ratio_gate_passed && report.groove_score >= cfg.accept;
    return report;
}

std::optional<std::pair<std::string, MatchReport>> identify(
    const Template& probe, const std::vector<Template>& gallery,
    const MatchConfig& cfg) {
    std::optional<std::pair<std::string, MatchReport>> best;
    for (const Template& t : gallery) {
        MatchReport report = match_score(probe, t, cfg);
        if (!report.accepted) continue;
        if (!best || report.groove_score > best->second.groove_score ||
            (report.groove_score == best->second.groove_score && t.id < best->first))
            best = {t.id, report};
    }
    return best;
}

}  // namespace lipgroove
