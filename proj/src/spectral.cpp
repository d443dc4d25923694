#include "mcg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef MCG_HAVE_FFTW
#include <fftw3.h>
#endif

namespace mcg {

namespace {

void require_symmetric(const DistanceRow& row) {
    for (int64_t j = 1; j < row.n; ++j)
        if (row.dist[j] != row.dist[row.n - j])
            throw domain_error("circulant_spectrum: row is not symmetric at j=" +
                               std::to_string(j));
}

// One eigenvalue by direct cosine summation. Kahan-compensated for large n:
// entries grow like h*n and the plain sum loses digits past ~4096 terms.
double eigen_direct(const DistanceRow& row, int64_t k, bool compensated) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(row.n);
    if (!compensated) {
        double s = 0.0;
        for (int64_t j = 0; j < row.n; ++j)
            s += static_cast<double>(row.dist[j]) * std::cos(w * static_cast<double>(j));
        return s;
    }
    double s = 0.0, c = 0.0;
    for (int64_t j = 0; j < row.n; ++j) {
        double term = static_cast<double>(row.dist[j]) * std::cos(w * static_cast<double>(j));
        double y = term - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

std::vector<double> spectrum_direct(const DistanceRow& row, bool parallel) {
    const bool comp = row.n > 4096;
    std::vector<double> out(row.n);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int64_t k = 0; k < row.n; ++k) out[k] = eigen_direct(row, k, comp);
    } else {
        for (int64_t k = 0; k < row.n; ++k) out[k] = eigen_direct(row, k, comp);
    }
    return out;
}

#ifdef MCG_HAVE_FFTW
std::vector<double> spectrum_fft(const DistanceRow& row) {
    const int64_t n = row.n;
    std::vector<double> in(n);
    for (int64_t j = 0; j < n; ++j) in[j] = static_cast<double>(row.dist[j]);
    std::vector<double> half(n / 2 + 1);
    {
        fftw_complex* out =
            static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1)));
        fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(), out,
                                              FFTW_ESTIMATE);
        fftw_execute(plan);
        // symmetric row: imaginary parts vanish, keep real parts
        for (int64_t k = 0; k <= n / 2; ++k) half[k] = out[k][0];
        fftw_destroy_plan(plan);
        fftw_free(out);
    }
    std::vector<double> full(n);
    for (int64_t k = 0; k <= n / 2; ++k) full[k] = half[k];
    for (int64_t k = n / 2 + 1; k < n; ++k) full[k] = half[n - k];
    return full;
}
#endif

} // namespace

Spectrum circulant_spectrum(const DistanceRow& row, SpectrumMethod method) {
    require_symmetric(row);

    Spectrum sp;
    sp.n = row.n;
    switch (method) {
    case SpectrumMethod::Direct:
        sp.by_index = spectrum_direct(row, false);
        break;
    case SpectrumMethod::DirectParallel:
        sp.by_index = spectrum_direct(row, true);
        break;
    case SpectrumMethod::Fft:
#ifdef MCG_HAVE_FFTW
        sp.by_index = spectrum_fft(row);
        break;
#else
        throw domain_error("FFT spectrum path not built in");
#endif
    case SpectrumMethod::Auto:
#ifdef MCG_HAVE_FFTW
        if (row.n > 4096) {
            sp.by_index = spectrum_fft(row);
            break;
        }
#endif
        sp.by_index = spectrum_direct(row, row.n > 1024);
        break;
    }

    sp.eigenvalues = sp.by_index;
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end(), std::greater<>());
    sp.radius = sp.eigenvalues.empty() ? 0.0 : sp.eigenvalues.front();
    return sp;
}

RadiusCheck spectral_radius_check(const DistanceRow& row, double tol,
                                  SpectrumMethod method) {
    const Spectrum sp = circulant_spectrum(row, method);
    RadiusCheck rc;
    rc.radius = sp.radius;
    rc.transmission = static_cast<double>(row.transmission);
    rc.ok = std::abs(rc.radius - rc.transmission) <= tol * std::max(1.0, rc.transmission);
    return rc;
}

} // namespace mcg
