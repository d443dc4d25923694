// Compares the serial reference kernels against their OpenMP counterparts
// and checks that both produce identical results.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcg/circulant.hpp"
#include "mcg/distance.hpp"
#include "mcg/routing.hpp"
#include "mcg/spectral.hpp"

namespace {

double seconds(auto fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench_spectrum(int64_t m, int32_t h) {
    const auto row = mcg::recursive_row(m, h);
    mcg::Spectrum serial, parallel;
    const double ts = seconds([&] {
        serial = mcg::circulant_spectrum(row, mcg::SpectrumMethod::Direct);
    });
    const double tp = seconds([&] {
        parallel = mcg::circulant_spectrum(row, mcg::SpectrumMethod::DirectParallel);
    });
    const bool same = serial.by_index == parallel.by_index;
    std::printf("spectrum   MC(%lld^%d) n=%lld  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
                (long long)m, h, (long long)row.n, ts, tp, ts / tp,
                same ? "identical" : "MISMATCH");
#ifdef MCG_HAVE_FFTW
    const double tf = seconds([&] { mcg::circulant_spectrum(row, mcg::SpectrumMethod::Fft); });
    std::printf("spectrum   MC(%lld^%d) fft %.4fs\n", (long long)m, h, tf);
#endif
}

void bench_all_rows(int64_t m, int32_t h) {
    const auto g = mcg::build_mc(m, h);
    std::vector<mcg::DistanceRow> serial, parallel;
    const double ts = seconds([&] { serial = mcg::all_rows_serial(g); });
    const double tp = seconds([&] { parallel = mcg::all_rows_parallel(g); });
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].dist == parallel[i].dist;
    std::printf("all-rows   MC(%lld^%d) n=%lld  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
                (long long)m, h, (long long)g.n, ts, tp, ts / tp,
                same ? "identical" : "MISMATCH");
}

void bench_routing_loads(int64_t m, int32_t h) {
    const auto g = mcg::build_mc(m, h);
    mcg::LoadProfile serial, parallel;
    const double ts = seconds([&] { serial = mcg::translation_invariant_loads_serial(g); });
    const double tp = seconds([&] { parallel = mcg::translation_invariant_loads_parallel(g); });
    const bool same = serial.vertex_load == parallel.vertex_load &&
                      serial.edge_load == parallel.edge_load;
    std::printf("loads      MC(%lld^%d) n=%lld  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
                (long long)m, h, (long long)g.n, ts, tp, ts / tp,
                same ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif
    bench_spectrum(2, 13);
    bench_spectrum(3, 8);
    bench_all_rows(2, 11);
    bench_all_rows(3, 7);
    bench_routing_loads(2, 11);
    bench_routing_loads(3, 7);
    return 0;
}
