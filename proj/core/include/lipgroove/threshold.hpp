#pragma once

#include <vector>

#include "lipgroove/raster.hpp"

namespace lipgroove {

/// Record of the iterative mean-threshold run. `iterations` holds every
/// threshold value in order, starting with the initial global mean and
/// ending with the converged value (the last two entries differ by at
/// most `epsilon`).
struct ThresholdTrace {
    std::vector<double> iterations;
    double final = 0.0;
    double epsilon = 0.0;
};

/// Arithmetic mean of all pixel intensities. Pixel sum is accumulated in
/// exact integer arithmetic, so the result is the correctly rounded
/// rational sum/count (and equals the DC coefficient of the image's DFT
/// divided by the pixel count).
double mean_intensity(const GrayImage& r);

/// Two-cluster iterative mean split: start at the global mean, then
/// repeatedly set t to the average of the below-t and above-or-equal-t
/// cluster means until the change is at most epsilon. An empty cluster
/// contributes the current threshold as its mean, which forces
/// convergence on constant images.
ThresholdTrace iterative_threshold(const GrayImage& r, double epsilon = 1.0);

/// Object pixels are strictly below the threshold; background is >= t.
SegmentMask segment(const GrayImage& r, double threshold);

/// Background pixels to zero, object pixels unchanged.
GrayImage blacken_background(const GrayImage& r, const SegmentMask& m);

}  // namespace lipgroove
