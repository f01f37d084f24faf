#pragma once

#include <filesystem>
#include <optional>

namespace ahgmm {

/// Average human face dimensions (cm) used to label pixel densities from a
/// cropped face size: bitragion breadth and menton-crinion length.
inline constexpr double kFaceWidthCm = 15.45;
inline constexpr double kFaceHeightCm = 20.75;

/// Airborne camera intrinsics and pose. Units: f in cm, pixel pitch in
/// cm/px, altitude h1 in cm, tilt from nadir theta_p in radians.
struct CameraModel {
    double f = 0.0;
    double p_h = 0.0;
    double p_v = 0.0;
    double h1 = 0.0;
    double theta_p = 0.0;
};

/// Rectangular sensitive region inside an image. theta_r is the view angle
/// in radians; when unset it defaults to the camera tilt theta_p. h2 is the
/// subject height above ground in cm.
struct FaceRegion {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
    std::optional<double> theta_r;
    double h2 = 0.0;

    /// Region midpoint in pixel-center coordinates.
    double center_x() const { return x + (width - 1) / 2.0; }
    double center_y() const { return y + (height - 1) / 2.0; }
};

/// Horizontal/vertical pixel density of a face region, in px/cm.
struct PixelDensity {
    double rho_h = 0.0;
    double rho_v = 0.0;
};

/// Densities at which a state-of-the-art recognizer starts working; faces
/// above both must be filtered.
struct DensityThreshold {
    double rho_h_o = 0.0;
    double rho_v_o = 0.0;
};

/// Pixel densities around the face center from camera geometry:
///   rho_h = f cos(theta_R) / (p_h (h1 - h2))
///   rho_v = f cos(theta_R) sin(theta_R) / (p_v (h1 - h2))
/// Throws std::invalid_argument if h1 <= h2 (face above camera) or if the
/// camera model violates its invariants.
PixelDensity density_from_camera(const CameraModel& cam, const FaceRegion& face);

/// Pixel densities from the cropped face size s_c (px) and pitch angle
/// gamma (radians): rho_h = s_c/s_h, rho_v = s_c cos(gamma)/s_v.
PixelDensity density_from_face_size(double s_c, double gamma,
                                    double s_h = kFaceWidthCm,
                                    double s_v = kFaceHeightCm);

/// Filtering gate: true iff both densities strictly exceed their
/// thresholds. Boundary values gate false.
bool gate(const PixelDensity& density, const DensityThreshold& thr);

/// Camera model and/or thresholds loaded from a JSON config file with flat
/// fields named f, p_h, p_v, h1, theta_p, rho_h_o, rho_v_o. Angles are in
/// radians in the file.
struct GeometryConfig {
    std::optional<CameraModel> camera;
    std::optional<DensityThreshold> threshold;
};

GeometryConfig load_geometry_config(const std::filesystem::path& path);

} // namespace ahgmm
