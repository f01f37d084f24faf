#pragma once

#include <optional>
#include <utility>

#include "ahgmm/hopping.hpp"
#include "ahgmm/image.hpp"

namespace ahgmm {

/// What the pipeline did to one face. When gated is false the input was
/// passed through untouched and no other field is populated.
struct FilterReport {
    bool gated = false;
    std::optional<KernelSpec> sigma_o;                       // zero-mean optimal PSF
    std::optional<int> n_regions;                            // N
    std::optional<std::pair<double, double>> global_sigma;   // sigma_o / Q per axis
    std::optional<double> psnr_vs_original;                  // dB over the face region
};

struct FilterResult {
    ImagePlane image;
    FilterReport report;
};

/// Test hook: lets the degeneracy oracle disable the de-blocking pass.
struct AhgmmOptions {
    bool global_smoothing = true;
};

/// The hopping-mixture pipeline: gate on density, size the optimal PSF per
/// axis, partition the face, derive the seeded plan, convolve each
/// sub-region with its mixture kernel (reading from the original face,
/// mirrored at the face boundary), smooth globally with sigma_o / Q, and
/// paste back. Pixels outside the face are untouched.
FilterResult filter_ahgmm(const ImagePlane& img, const FaceRegion& face,
                          const PixelDensity& density, const DensityThreshold& thr,
                          const HoppingConfig& cfg, const AhgmmOptions& opts = {});

/// The local pass alone (no gate, no global smoothing): each sub-region
/// convolved with its mixture kernel. Exposed to measure the blocking
/// artefacts the global pass exists to remove.
ImagePlane filter_region_local_only(const ImagePlane& img, const FaceRegion& face,
                                    const HoppingPlan& plan);

} // namespace ahgmm
