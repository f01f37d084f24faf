#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "ahgmm/geometry.hpp"

namespace ahgmm {

/// Planar floating-point image: one contiguous row-major plane per channel,
/// intensities in [0, r_max]. All filtering runs on this representation;
/// quantization happens only when saving.
struct ImagePlane {
    int width = 0;
    int height = 0;
    int channels = 1;
    double r_max = 255.0;
    std::vector<double> data; // channels * width * height, plane-contiguous

    ImagePlane() = default;
    ImagePlane(int w, int h, int c = 1, double fill = 0.0)
        : width(w), height(h), channels(c),
          data(static_cast<std::size_t>(w) * h * c, fill) {}

    std::size_t plane_size() const {
        return static_cast<std::size_t>(width) * height;
    }
    double& at(int x, int y, int c = 0) {
        return data[c * plane_size() + static_cast<std::size_t>(y) * width + x];
    }
    double at(int x, int y, int c = 0) const {
        return data[c * plane_size() + static_cast<std::size_t>(y) * width + x];
    }
    bool same_shape(const ImagePlane& other) const {
        return width == other.width && height == other.height &&
               channels == other.channels;
    }
};

/// Loads a PNG or binary PGM/PPM file. 8-bit samples map to intensities
/// 0-255 exactly. Throws IoError on unreadable files, FormatError on
/// anything that is not a supported raster format.
ImagePlane load_image(const std::filesystem::path& path);

/// Saves as PNG (.png) or binary PGM/PPM (.pgm/.ppm/.pnm by channel count).
/// Intensities are rounded half-to-even to the nearest integer before
/// encoding; round-trips are bit-exact for in-range integer data.
void save_image(const ImagePlane& img, const std::filesystem::path& path);

/// The region's sub-image. Throws std::out_of_range if the region does not
/// lie fully inside the image.
ImagePlane crop(const ImagePlane& img, const FaceRegion& region);

/// Copy of `img` with `patch` written at `region`. Patch dimensions must
/// equal the region's.
ImagePlane paste(const ImagePlane& patch, const ImagePlane& img,
                 const FaceRegion& region);

} // namespace ahgmm
