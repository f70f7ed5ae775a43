#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace migrasim {

/// Laplacian spectrum summary. Eigenvalues with modulus below
/// zero_tol * max(1, ||L||_inf) count as the structural zero.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues; // unordered, size n
    std::size_t zero_count = 0;
    double lambda2_re = 0.0; // min Re over nonzero eigenvalues; valid iff
                             // zero_count < n
};

inline constexpr double kDefaultZeroTol = 1e-9;

/// All eigenvalues of the (generally nonsymmetric) n x n matrix,
/// row-major. Throws std::runtime_error if the eigensolver fails to
/// converge.
Spectrum spectrum(const std::vector<double>& matrix, std::size_t n,
                  double zero_tol = kDefaultZeroTol);

} // namespace migrasim
