#pragma once

#include <vector>

#include "mcg/distance.hpp"

namespace mcg {

// Eigenvalues of the symmetric circulant matrix with first row `dist`:
// lambda_k = sum_j dist[j] cos(2 pi j k / n). All real.
struct Spectrum {
    int64_t n = 0;
    std::vector<double> by_index;    // lambda_k in DFT index order
    std::vector<double> eigenvalues; // sorted descending
    double radius = 0.0;
};

enum class SpectrumMethod { Auto, Direct, DirectParallel, Fft };

// Throws domain_error if the row is not symmetric (dist[j] != dist[n-j]).
Spectrum circulant_spectrum(const DistanceRow& row,
                            SpectrumMethod method = SpectrumMethod::Auto);

struct RadiusCheck {
    bool ok = false;
    double radius = 0.0;
    double transmission = 0.0;
};

// Verifies that the spectral radius equals the transmission within
// tol * max(1, transmission).
RadiusCheck spectral_radius_check(const DistanceRow& row, double tol,
                                  SpectrumMethod method = SpectrumMethod::Auto);

} // namespace mcg
