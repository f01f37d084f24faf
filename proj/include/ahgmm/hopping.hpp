#pragma once

#include <filesystem>
#include <vector>

#include "ahgmm/geometry.hpp"
#include "ahgmm/kernel.hpp"
#include "ahgmm/prng.hpp"

namespace ahgmm {

/// Configuration of the hopping mixture: sub-region block size, number of
/// supplementary Gaussians M, relative-size factor gamma for the
/// supplementary components, and the secret key.
struct HoppingConfig {
    int q_h = 4;
    int q_v = 4;
    int num_supplementary = 1; // M
    double gamma = 0.5;        // applied to components with m > 0
    SeedKey seed;

    /// Test hook: forces alpha = beta = 0, all signs +, equal weights, and
    /// consumes no keystream. Every component then equals the optimal
    /// kernel scaled by gamma^(m>0).
    bool zero_hops = false;
};

/// One block of the face partition, in face-local pixel coordinates.
struct SubRegion {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

/// Row-major tiling of the face into q_h x q_v blocks; right/bottom
/// remainder blocks are smaller but never empty.
std::vector<SubRegion> partition(const FaceRegion& face, const HoppingConfig& cfg);

/// One mixture component of one sub-region: final kernel parameters, its
/// weight, and the raw draws that produced them (kept for audit).
struct HopComponent {
    double mu_h = 0.0;
    double mu_v = 0.0;
    double sigma_h = 0.0;
    double sigma_v = 0.0;
    double phi = 1.0;

    double alpha_h = 0.0, beta_h = 0.0;
    double alpha_v = 0.0, beta_v = 0.0;
    int sign_mu_h = 1, sign_sigma_h = 1;
    int sign_mu_v = 1, sign_sigma_v = 1;
};

/// The full per-sub-region parameter set, a pure function of
/// (seed, config, sigma_o, n_regions).
struct HoppingPlan {
    KernelSpec sigma_o;  // zero-mean optimal spec the plan was derived from
    int q_h = 4;
    int q_v = 4;
    double gamma = 0.5;
    int n_regions = 0;
    std::vector<std::vector<HopComponent>> regions; // [n][m], m in 0..M

    int num_supplementary() const {
        return regions.empty() ? 0 : static_cast<int>(regions.front().size()) - 1;
    }
};

/// Derives the plan with the canonical draw order: for each region n in
/// row-major order, for m = 0..M, for axis j in (h, v): draw sign_mu,
/// alpha_jm, sign_sigma, beta_jm; then draw M+1 uniforms u_m and set
/// phi_nm = u_m / sum(u). Parameters:
///   mu_jm    = sign_mu * alpha_jm * sigma_j^o * (m == 0 ? 1 : gamma)
///   sigma_jm = (1 + sign_sigma * beta_jm) * sigma_j^o * (m == 0 ? 1 : gamma)
/// with sigma_jm clamped below at max(0.05 * sigma_j^o, 0.3 px).
HoppingPlan derive_plan(const KernelSpec& sigma_o, int n_regions,
                        const HoppingConfig& cfg);

/// Mixture kernel of one region: each component discretized on its own
/// support, zero-padded to the union support, and summed with its weight.
KernelGrid build_mixture(const std::vector<HopComponent>& components,
                         int max_support = kDefaultMaxSupport);

/// One mixture kernel per region, in region order.
std::vector<KernelGrid> build_mixtures(const HoppingPlan& plan,
                                       int max_support = kDefaultMaxSupport);

/// Versioned JSON sidecar ("ahgmm-plan/1") for audit and the accurate
/// attack mode. Doubles round-trip exactly.
void save_plan(const HoppingPlan& plan, const std::filesystem::path& path);
HoppingPlan load_plan(const std::filesystem::path& path);

} // namespace ahgmm
