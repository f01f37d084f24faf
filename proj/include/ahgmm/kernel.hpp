#pragma once

#include <iosfwd>
#include <vector>

#include "ahgmm/image.hpp"

namespace ahgmm {

/// Anisotropic Gaussian PSF parameters: mean offsets and standard
/// deviations in pixels, per axis. sigma_h and sigma_v must be > 0.
struct KernelSpec {
    double mu_h = 0.0;
    double mu_v = 0.0;
    double sigma_h = 0.0;
    double sigma_v = 0.0;
};

/// Discretized PSF on the centered integer grid
/// {-(support_h-1)/2 .. +(support_h-1)/2} x {-(support_v-1)/2 .. ...}.
/// Weights are non-negative, sum to 1, and are stored row-major with the
/// vertical offset as the row index.
struct KernelGrid {
    int support_h = 1;
    int support_v = 1;
    std::vector<double> weights;

    int radius_h() const { return (support_h - 1) / 2; }
    int radius_v() const { return (support_v - 1) / 2; }
    double at(int dh, int dv) const {
        return weights[static_cast<std::size_t>(dv + radius_v()) * support_h +
                       (dh + radius_h())];
    }
    double& at(int dh, int dv) {
        return weights[static_cast<std::size_t>(dv + radius_v()) * support_h +
                       (dh + radius_h())];
    }
};

inline constexpr int kDefaultMaxSupport = 1025;

/// Smallest standard deviation (px) that pushes a face of density rho below
/// the recognizability threshold rho_o: 3*rho / (pi*rho_o).
double optimal_sigma(double rho, double rho_o);

/// Frequency-domain standard deviation (cycles/cm) of a spatial Gaussian of
/// sigma_spatial px at pixel density rho px/cm: rho / (2*pi*sigma_spatial).
double to_frequency_sigma(double sigma_spatial, double rho);

/// Odd support size 2*ceil(3*sigma) + 1.
int gaussian_support(double sigma);

/// Normalized anisotropic Gaussian sampled at integer offsets over the
/// centered support given by gaussian_support per axis. Values below 1e-300
/// are flushed to zero before normalization. Throws KernelError if either
/// support would exceed max_support.
KernelGrid discretize(const KernelSpec& spec, int max_support = kDefaultMaxSupport);

/// Handling of out-of-image neighborhoods. mirror reflects without
/// repeating the edge pixel; periodic wraps.
enum class BorderRule { mirror, periodic };

/// Maps an arbitrary index onto [0, n) under the given border rule.
int wrap_index(int i, int n, BorderRule border);

/// Kernel response at one pixel of one channel: the correlation sum
/// sum_{dh,dv} K(dh,dv) * src(x+dh, y+dv) with borders wrapped per rule.
/// The single source of per-pixel arithmetic for every space-variant and
/// space-invariant filter in this library, so degenerate-parameter
/// equivalences hold bit-exactly.
double apply_kernel_at(const ImagePlane& src, int x, int y, int c,
                       const KernelGrid& grid, BorderRule border);

/// Full same-size correlation of the image with a centered kernel.
/// Parallelizes over rows; output is independent of the thread count.
ImagePlane convolve(const ImagePlane& img, const KernelGrid& grid,
                    BorderRule border = BorderRule::mirror);

/// Separable two-pass equivalent of convolve(img, discretize(spec)).
/// Matches the direct path within 1e-9 per pixel; not used by the filter
/// pipelines (they need the bitwise-reproducible direct path).
ImagePlane convolve_separable(const ImagePlane& img, const KernelSpec& spec,
                              BorderRule border = BorderRule::mirror,
                              int max_support = kDefaultMaxSupport);

/// Plain-text matrix dump (one row per line) for --dump-kernel.
void dump_kernel(const KernelGrid& grid, std::ostream& out);

} // namespace ahgmm
