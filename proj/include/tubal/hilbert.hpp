#pragma once

#include <array>
#include <iosfwd>

#include "tubal/hotsvd.hpp"

namespace tubal {

/// A(i,j,k,l) = (i+j+k+l-3)^{-1} on 2x2x2x2 (1-based), viewed as a 2x2x2
/// tubal tensor with p = 2 (DFT).
TubalTensor hilbert_tensor();

struct HilbertDemoResult {
    std::array<std::array<double, 2>, 3> slice_norms;  // per mode
    std::array<double, 2> corner_top;     // |S(0,0,0)| slice magnitudes
    std::array<double, 2> corner_bottom;  // |S(1,1,1)| slice magnitudes
    double orthogonality_residual;
    bool pass;  // norms within 1e-3 of the reference values
};

/// Runs the full Hot-SVD on the Hilbert tensor and prints a short report.
HilbertDemoResult run_hilbert_demo(std::ostream& out);

} // namespace tubal
