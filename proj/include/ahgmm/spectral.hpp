#pragma once

#include <complex>
#include <vector>

namespace ahgmm {

/// Forward 2-D DFT of a real w x h array (row-major). Plans are cached per
/// size; execution is thread-safe.
std::vector<std::complex<double>> dft2(const std::vector<double>& real_input,
                                       int w, int h);

/// Inverse 2-D DFT, normalized by 1/(w*h); returns the real part.
std::vector<double> idft2_real(const std::vector<std::complex<double>>& input,
                               int w, int h);

} // namespace ahgmm
