#pragma once

#include <filesystem>

#include "ahgmm/image.hpp"

namespace ahgmm {

/// Mean squared intensity difference over all pixels and channels.
/// Throws std::invalid_argument on dimension mismatch.
double mse(const ImagePlane& a, const ImagePlane& b);

/// 20*log10(r_max / sqrt(mse)); +infinity for identical images.
double psnr(const ImagePlane& a, const ImagePlane& b);

/// Dataset-level accumulator: pools squared error across image pairs so
/// the final PSNR comes from one pooled MSE, not a mean of per-image dB.
class MseAccumulator {
public:
    void add(const ImagePlane& a, const ImagePlane& b);
    double mse() const;
    double psnr(double r_max = 255.0) const;
    long long pixel_count() const { return count_; }

private:
    double sum_sq_ = 0.0;
    long long count_ = 0;
};

/// Fraction of AC spectral power at radial frequency above `cutoff`
/// (cycles/px, in (0, 0.5]), via the 2-D DFT magnitude squared, summed over
/// channels. A constant image has no AC power and returns 0.
double band_energy(const ImagePlane& img, double cutoff);

/// Blocking-artefact score for a q_h x q_v block grid: mean absolute
/// gradient across block boundaries minus mean absolute gradient inside
/// blocks. Higher means more visible blocking.
double blockiness(const ImagePlane& img, int q_h, int q_v);

/// Verification counts ingested from an external recognizer.
struct VerificationTally {
    long long tp = 0;
    long long tn = 0;
    long long total = 0;
};

/// (tp + tn) / total. Throws std::invalid_argument when total == 0.
double accuracy_from_tally(const VerificationTally& t);

/// CSV with columns (pair_id, same_subject, predicted_same); an optional
/// header line is skipped. TP counts same_subject && predicted_same, TN
/// counts !same_subject && !predicted_same, total counts rows.
VerificationTally read_tally_csv(const std::filesystem::path& path);

} // namespace ahgmm
