#include "migrasim/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace migrasim {

Spectrum spectrum(const std::vector<double>& matrix, std::size_t n,
                  double zero_tol) {
    if (matrix.size() != n * n) {
        throw std::invalid_argument("spectrum: matrix size mismatch");
    }
    if (!(zero_tol > 0.0)) {
        throw std::invalid_argument("spectrum: zero_tol must be positive");
    }
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                         Eigen::RowMajor>>
        m(matrix.data(), static_cast<Eigen::Index>(n),
          static_cast<Eigen::Index>(n));

    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectrum: eigensolver did not converge");
    }

    // infinity norm of the matrix, for the relative zero threshold
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(matrix[i * n + j]);
        norm = std::max(norm, row);
    }
    const double threshold = zero_tol * std::max(1.0, norm);

    Spectrum s;
    s.eigenvalues.reserve(n);
    s.lambda2_re = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const std::complex<double> lambda = solver.eigenvalues()[k];
        s.eigenvalues.push_back(lambda);
        if (std::abs(lambda) < threshold) {
            ++s.zero_count;
        } else {
            s.lambda2_re = std::min(s.lambda2_re, lambda.real());
        }
    }
    if (s.zero_count == n) s.lambda2_re = 0.0;
    return s;
}

} // namespace migrasim
