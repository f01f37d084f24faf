#pragma once

#include "ahgmm/image.hpp"
#include "ahgmm/kernel.hpp"

namespace ahgmm {

/// Space-variant baseline: concentric rings with a per-ring kernel shrink.
struct SvgbConfig {
    int n_rings = 4;
    double decay = 0.05;
};

/// Zero-mean anisotropic blur sized for a fixed reference density
/// (default: the highest-resolution face of the ladder), applied to the
/// whole face regardless of its own density.
ImagePlane filter_fgb(const ImagePlane& img, const FaceRegion& face,
                      const PixelDensity& ref_density, const DensityThreshold& rho_o,
                      int max_support = kDefaultMaxSupport);

inline constexpr PixelDensity kFgbReferenceDensity{6.21, 4.63};

/// Zero-mean anisotropic blur sized from the face's own density, gated:
/// below-threshold faces pass through unchanged.
ImagePlane filter_agb(const ImagePlane& img, const FaceRegion& face,
                      const PixelDensity& density, const DensityThreshold& thr,
                      int max_support = kDefaultMaxSupport);

/// Isotropic ring blur: innermost ring uses max(sigma_h^o, sigma_v^o),
/// each ring outward shrinks sigma by the decay fraction. Rings are
/// annuli of equal radial width about the region midpoint, outermost
/// radius = half the region diagonal. Gated like AGB.
ImagePlane filter_svgb(const ImagePlane& img, const FaceRegion& face,
                       const PixelDensity& density, const DensityThreshold& thr,
                       const SvgbConfig& cfg = {},
                       int max_support = kDefaultMaxSupport);

/// Optimal zero-mean PSF for a density/threshold pair (Q-independent part
/// shared by AGB, FGB sizing, and the attack harness).
KernelSpec optimal_spec(const PixelDensity& density, const DensityThreshold& thr);

} // namespace ahgmm
