#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ahgmm/geometry.hpp"
#include "ahgmm/image.hpp"

namespace ahgmm {

/// One rung of the multi-resolution ladder: the downsampled image, its
/// density labels, and whether its resolution is low enough to count as
/// inherently protected (6x6 and below).
struct LadderRung {
    ImagePlane image;
    PixelDensity density;
    double pitch_deg = 0.0;
    int factor = 1;
    bool inherently_protected = false;
};

/// Anti-aliased decimation: Gaussian pre-blur with sigma = 0.5 * factor,
/// then keep every factor-th pixel. Factor 1 is the identity.
ImagePlane downsample(const ImagePlane& img, int factor);

/// Downsamples a 96x96 source by each factor and labels each rung with
/// densities from its face size at the given pitch. Throws
/// std::invalid_argument for a non-96x96 source.
std::vector<LadderRung> build_ladder(const ImagePlane& src,
                                     const std::vector<int>& factors,
                                     double pitch_deg);

inline const std::vector<int> kDefaultLadderFactors{1, 2, 4, 8, 16};

/// Deterministic procedural face-like test image: smooth head/eye/mouth
/// blobs plus fine texture, seeded so corpora are reproducible without
/// shipping photographs.
ImagePlane synth_face(std::uint64_t seed, int size = 96);

/// Writes root/<pitch>/<size>/<name>.png for every image x factor x pitch
/// combination plus a versioned JSON manifest ("ahgmm-dataset/1") with
/// densities, CRC32 checksums, and provenance. Returns the manifest path.
std::filesystem::path layout_dataset(
    const std::filesystem::path& root,
    const std::vector<std::pair<std::string, ImagePlane>>& images,
    const std::vector<int>& factors, const std::vector<double>& pitches_deg);

} // namespace ahgmm
