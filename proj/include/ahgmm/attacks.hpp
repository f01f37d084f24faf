#pragma once

#include <optional>

#include "ahgmm/baselines.hpp"
#include "ahgmm/filter.hpp"
#include "ahgmm/hopping.hpp"
#include "ahgmm/image.hpp"

namespace ahgmm {

/// Adversary knowledge levels: the optimal kernel only, the hopping scheme
/// with a wrong key, or the true per-region plan.
enum class AdversaryKind { optimal, pseudo, accurate };

/// cfg carries the adversary's key (wrong for pseudo, true for accurate)
/// and the block parameters it assumes. For accurate attacks a captured
/// plan sidecar takes precedence over re-deriving from cfg.
struct AdversaryModel {
    AdversaryKind kind = AdversaryKind::optimal;
    HoppingConfig cfg;
    std::optional<HoppingPlan> plan;
};

/// Wiener deconvolution of each channel with a scalar noise-to-signal
/// ratio. The image is mirror-padded by the kernel radius before the FFT to
/// suppress boundary ringing; nsr is floored at 1e-6 so a zero setting
/// stays well-posed. Output clamped to [0, r_max].
ImagePlane wiener_deconvolve(const ImagePlane& img, const KernelGrid& kernel,
                             double nsr);

/// Inverse-filter reconstruction of the protected face region.
///   optimal:  one Wiener pass over the whole face with the assumed optimal
///             kernel.
///   pseudo:   per-sub-region Wiener passes with a plan derived from the
///             adversary's (wrong) key.
///   accurate: per-sub-region Wiener passes with the true plan's mixture
///             kernels, then a Wiener pass for the global smoothing kernel.
/// Each per-sub-region pass deconvolves the whole face with that region's
/// kernel and keeps only the region's pixels, so adjacent regions are
/// treated as if they shared the kernel. Returns the image with the
/// reconstructed face pasted in.
ImagePlane attack_inverse(const ImagePlane& protected_img, const FaceRegion& face,
                          const AdversaryModel& adversary,
                          const KernelSpec& assumed_sigma_o, double nsr);

/// Applies the adversary's best-guess filter to a gallery image to build
/// protected-domain gallery material: the optimal kernel for `optimal`,
/// the full hopping pipeline keyed by the adversary's key otherwise.
ImagePlane attack_parrot_transform(const ImagePlane& gallery_img,
                                   const FaceRegion& face,
                                   const AdversaryModel& adversary,
                                   const PixelDensity& density,
                                   const DensityThreshold& thr,
                                   const HoppingConfig& cfg);

} // namespace ahgmm
