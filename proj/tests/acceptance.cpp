// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "mcg/circulant.hpp"
#include "mcg/closed_forms.hpp"
#include "mcg/distance.hpp"
#include "mcg/routing.hpp"
#include "mcg/spectral.hpp"

using namespace mcg;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& name, const std::string& note = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", id, ok ? "PASS" : "FAIL", name.c_str(),
                note.empty() ? "" : "  -- ", note.c_str());
    if (!ok) ++failures;
}

double elapsed_ms(auto fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void criterion1() {
    const std::vector<int32_t> want_row = {0, 1, 1, 2, 1, 2, 1, 1};
    const std::vector<std::vector<int32_t>> want_matrix = {
        {0, 1, 1, 2, 1, 2, 1, 1}, {1, 0, 1, 1, 2, 1, 2, 1}, {1, 1, 0, 1, 1, 2, 1, 2},
        {2, 1, 1, 0, 1, 1, 2, 1}, {1, 2, 1, 1, 0, 1, 1, 2}, {2, 1, 2, 1, 1, 0, 1, 1},
        {1, 2, 1, 2, 1, 1, 0, 1}, {1, 1, 2, 1, 2, 1, 1, 0}};
    bool ok = false;
    const double ms = elapsed_ms([&] {
        const auto row = bfs_distances(build_mc(2, 3), 0).row;
        ok = row.dist == want_row && distance_matrix(row) == want_matrix;
    });
    report(1, ok && ms < 1.0, "MC(2,3) row and 8x8 matrix",
           "computed in " + std::to_string(ms) + " ms");
}

void criterion2() {
    const std::vector<int32_t> want = {0, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1, 1};
    const auto oracle = bfs_distances(build_mc(2, 4), 0).row;
    const auto rec = extend_row_base2(recursive_row(2, 3), 4);
    report(2, oracle.dist == want && rec.dist == want,
           "MC(2,4) row via oracle and extend_row_base2");
}

void criterion3() {
    const std::vector<int32_t> want = {0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3};
    const auto oracle = bfs_distances(build_mc(3, 4), 0).row;
    const auto rec = extend_row_base3(recursive_row(3, 3), 4);
    const auto head = [&](const DistanceRow& r) {
        return std::vector<int32_t>(r.dist.begin(), r.dist.begin() + 14);
    };
    report(3, head(oracle) == want && head(rec) == want,
           "MC(3,4) row prefix via both paths");
}

void criterion4() {
    const std::vector<std::pair<int64_t, int64_t>> table = {
        {1, -1}, {2, 3},   {5, 6},   {10, 11},  {21, 22},
        {42, 43}, {85, 86}, {170, 171}, {341, 342}, {682, 683}};
    bool ok = true;
    for (int32_t h = 1; h <= 10; ++h) {
        const auto th = thresholds_base2(h);
        if (th.max_lm != table[h - 1].first) ok = false;
        if (h == 1 && th.min_r.has_value()) ok = false;
        if (h > 1 && (!th.min_r || *th.min_r != table[h - 1].second)) ok = false;
    }
    report(4, ok, "threshold table h=1..10");
}

void criterion5() {
    bool ok = true;
    std::string note;
    const double ms = elapsed_ms([&] {
        for (auto [m, hmax] : {std::pair<int64_t, int32_t>{2, 14}, {3, 9}}) {
            for (int32_t h = 1; h <= hmax && ok; ++h) {
                const auto oracle = bfs_distances(build_mc(m, h), 0).row;
                const auto rec = recursive_row(m, h);
                if (oracle.dist != rec.dist ||
                    BigInt(oracle.transmission) != rho_closed(m, h) ||
                    oracle.diameter != diam_closed(m, h)) {
                    ok = false;
                    note = "mismatch at m=" + std::to_string(m) + " h=" + std::to_string(h);
                }
            }
        }
    });
    report(5, ok && ms < 60000.0, "oracle triangle m=2 h<=14, m=3 h<=9",
           note.empty() ? std::to_string(ms) + " ms" : note);
}

void criterion6() {
    report(6, rho_closed(2, 3) == 9 && mu_closed(2, 3) == BigRat(9, 7),
           "rho(MC(2,3))=9 and mu(MC(2,3))=9/7");
}

void criterion7() {
    bool ok = true;
    std::string note;
    for (auto [m, hs] : {std::pair<int64_t, std::vector<int32_t>>{2, {3, 8, 12, 16}},
                         {3, {2, 5, 8}}}) {
        for (int32_t h : hs) {
            const auto row = recursive_row(m, h);
            RadiusCheck rc;
            const double ms = elapsed_ms([&] { rc = spectral_radius_check(row, 1e-9); });
            if (!rc.ok || ms > 30000.0) {
                ok = false;
                note = "m=" + std::to_string(m) + " h=" + std::to_string(h) +
                       (rc.ok ? " too slow" : " radius mismatch");
            }
        }
    }
    report(7, ok, "spectral radius equals transmission up to n=65536", note);
}

void criterion8() {
    const auto fx = figure3_fixture();
    const auto rep1 = validate_routing(fx.graph, fx.r1);
    const auto rep2 = validate_routing(fx.graph, fx.r2);
    const auto l1 = loads(fx.graph, fx.r1);
    const auto l2 = loads(fx.graph, fx.r2);
    const bool xi_ok = l1.xi_of_r == 4 && l2.xi_of_r == 9;
    const bool flags_ok = rep1.valid && rep1.minimal && rep2.valid && !rep2.minimal;
    const std::vector<int64_t> printed_loads = {3, 4, 4, 0, 2, 2};
    const bool loads_ok = l1.vertex_load == printed_loads;
    std::string note;
    if (!loads_ok) {
        note = "R1 loads computed {";
        for (size_t i = 0; i < l1.vertex_load.size(); ++i)
            note += (i ? "," : "") + std::to_string(l1.vertex_load[i]);
        note += "} vs printed {3,4,4,0,2,2}; the printed R1 routes only two paths "
                "through vertex 1, so the printed table is unattainable";
    }
    report(8, xi_ok && flags_ok && loads_ok, "figure-3 fixture loads", note);
}

void criterion9() {
    bool ok = true;
    std::string note;
    for (int64_t m : {2, 3}) {
        for (int32_t h = 1;; ++h) {
            const auto g = build_mc(m, h);
            if (g.n > 512) break;
            const auto lp = translation_invariant_loads_serial(g);
            const int64_t expect = xi_closed(m, h).convert_to<int64_t>();
            for (int64_t v : lp.vertex_load)
                if (v != expect) {
                    ok = false;
                    note = "m=" + std::to_string(m) + " h=" + std::to_string(h);
                }
        }
    }
    report(9, ok, "translation-invariant loads certify xi = rho - (n-1), n <= 512", note);
}

void criterion10() {
    const bool xi_case = xi_closed(3, 3) == 28 && xi_printed_base3(3) == 46;
    bool pi_differs = true, lemma_consistent = true;
    for (int32_t h = 1; h <= 16; ++h) {
        if (BigRat(pi_bounds(2, h).upper) == pi_upper_printed_base2(h)) pi_differs = false;
        if (pi_bounds(2, h).lower > BigRat(pi_bounds(2, h).upper)) lemma_consistent = false;
    }
    // lemma-derived xi confirmed by the routing witness at n=27
    const auto lp = translation_invariant_loads_serial(build_mc(3, 3));
    const bool witness = lp.xi_of_r == 28;
    report(10, xi_case && pi_differs && lemma_consistent && witness,
           "errata: printed xi(3,3)=46 and pi upper bound flagged, lemma values hold");
}

void criterion11() {
    bool ok = true;
    const double ms = elapsed_ms([&] {
        const auto a = oeis_a045883(12);
        for (int32_t k = 1; k < 12 && ok; ++k)
            ok = a[k] == BigInt(bfs_distances(build_mc(2, k), 0).row.transmission);
        if (ok && a[0] != 0) ok = false;
        const auto b = oeis_a212697(12);
        for (int32_t k = 1; k <= 12 && ok; ++k)
            ok = b[k - 1] == BigInt(bfs_distances(build_mc(3, k), 0).row.transmission);
    });
    report(11, ok && ms < 5000.0, "OEIS prefixes equal oracle row sums",
           std::to_string(ms) + " ms");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
