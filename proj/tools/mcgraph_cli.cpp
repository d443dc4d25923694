#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcg/circulant.hpp"
#include "mcg/closed_forms.hpp"
#include "mcg/distance.hpp"
#include "mcg/io.hpp"
#include "mcg/routing.hpp"
#include "mcg/spectral.hpp"

namespace {

constexpr int kExitBadFlags = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitVerifyMismatch = 3;

struct Caps {
    bool unsafe = false;
    int32_t h_analyze(int64_t m) const { return unsafe ? 62 : (m == 2 ? 20 : 12); }
    int64_t matrix_n() const { return unsafe ? INT64_MAX : 4096; }
    int64_t routing_n() const { return unsafe ? INT64_MAX : 1024; }
    int64_t spectrum_n() const { return unsafe ? INT64_MAX : 65536; }
};

int64_t to_i64(const mcg::BigInt& v) { return v.convert_to<int64_t>(); }

void check_h_cap(int64_t m, int32_t h, const Caps& caps) {
    if (h > caps.h_analyze(m))
        throw mcg::size_limit_error("h=" + std::to_string(h) + " exceeds cap for m=" +
                                    std::to_string(m) + " (override with --unsafe-caps)");
}

int cmd_analyze(int64_t m, int32_t h, const std::string& format, const Caps& caps) {
    check_h_cap(m, h, caps);
    const mcg::ClosedFormReport r = mcg::closed_form_report(m, h);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = to_i64(r.n);
        j["m"] = r.m;
        j["h"] = r.h;
        j["regularity"] = r.regularity;
        j["diameter"] = r.diameter;
        j["rho"] = to_i64(r.rho);
        j["mu_num"] = to_i64(mcg::BigInt(boost::multiprecision::numerator(r.mu)));
        j["mu_den"] = to_i64(mcg::BigInt(boost::multiprecision::denominator(r.mu)));
        j["xi"] = to_i64(r.xi);
        j["pi_lower_num"] = to_i64(mcg::BigInt(boost::multiprecision::numerator(r.pi_lower)));
        j["pi_lower_den"] = to_i64(mcg::BigInt(boost::multiprecision::denominator(r.pi_lower)));
        j["pi_upper"] = to_i64(r.pi_upper);
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "m,h,n,regularity,diameter,rho,mu_num,mu_den,xi,"
                     "pi_lower_num,pi_lower_den,pi_upper\n"
                  << r.m << ',' << r.h << ',' << r.n << ',' << r.regularity << ','
                  << r.diameter << ',' << r.rho << ','
                  << boost::multiprecision::numerator(r.mu) << ','
                  << boost::multiprecision::denominator(r.mu) << ',' << r.xi << ','
                  << boost::multiprecision::numerator(r.pi_lower) << ','
                  << boost::multiprecision::denominator(r.pi_lower) << ',' << r.pi_upper
                  << "\n";
    } else {
        std::cout << "MC(" << m << "^" << h << ")  n=" << r.n << "\n"
                  << "regularity : " << r.regularity << "\n"
                  << "diameter   : " << r.diameter << "\n"
                  << "rho        : " << r.rho << "\n"
                  << "mu         : " << r.mu << "\n"
                  << "xi         : " << r.xi << "\n"
                  << "pi bounds  : [" << r.pi_lower << ", " << r.pi_upper << "]\n";
    }
    return 0;
}

struct VerifyResult {
    int32_t h = 0;
    bool ok = true;
    std::string detail;
};

VerifyResult verify_one(int64_t m, int32_t h) {
    VerifyResult vr;
    vr.h = h;
    const mcg::CirculantGraph g = mcg::build_mc(m, h);
    const mcg::DistanceRow oracle = mcg::bfs_distances(g, 0).row;
    const mcg::DistanceRow rec = mcg::recursive_row(m, h);
    if (oracle.dist != rec.dist) {
        vr.ok = false;
        vr.detail = "recursive row differs from oracle row";
        return vr;
    }
    if (mcg::BigInt(oracle.transmission) != mcg::rho_closed(m, h)) {
        vr.ok = false;
        vr.detail = "row sum differs from closed-form rho";
        return vr;
    }
    if (oracle.diameter != mcg::diam_closed(m, h)) {
        vr.ok = false;
        vr.detail = "row maximum differs from closed-form diameter";
        return vr;
    }
    if (m == 2) {
        const auto th = mcg::thresholds_base2(h);
        // copy/descend boundary must split the row exactly as the thresholds say
        if (h >= 2) {
            const auto prev = mcg::recursive_row(2, h - 1);
            const int64_t t = mcg::thresholds_base2(h - 1).max_lm;
            for (int64_t j = 0; j <= g.n / 2 && vr.ok; ++j) {
                const int32_t expect =
                    j <= t ? prev.dist[j] : prev.dist[j % prev.n] + 1;
                if (oracle.dist[j] != expect) {
                    vr.ok = false;
                    vr.detail = "threshold split mismatch at j=" + std::to_string(j);
                }
            }
        }
        if (vr.ok && th.min_r && *th.min_r != th.max_lm + 1) {
            vr.ok = false;
            vr.detail = "threshold pair inconsistent";
        }
    }
    return vr;
}

int cmd_verify(int64_t m, int32_t h_max, int32_t jobs, const Caps& caps) {
    check_h_cap(m, h_max, caps);
    std::vector<VerifyResult> results(h_max);
#ifdef _OPENMP
    if (jobs > 1) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic) if (jobs > 1)
#endif
    for (int32_t h = 1; h <= h_max; ++h) results[h - 1] = verify_one(m, h);

    for (const auto& vr : results) {
        if (!vr.ok) {
            std::cout << "MISMATCH at m=" << m << " h=" << vr.h << ": " << vr.detail << "\n";
            return kExitVerifyMismatch;
        }
        std::cout << "h=" << vr.h << " ok\n";
    }
    std::cout << "pass, " << h_max << " rows checked\n";
    for (const auto& e : mcg::errata_report(std::min<int32_t>(h_max, 8)))
        if (e.differs)
            std::cout << "note: printed " << e.quantity << " formula for m=" << e.m
                      << " h=" << e.h << " gives " << e.printed
                      << "; lemma-derived value is " << e.derived << "\n";
    return 0;
}

mcg::DistanceRow row_for(int64_t m, int32_t h) {
    if (m == 2 || m == 3) return mcg::recursive_row(m, h);
    return mcg::bfs_distances(mcg::build_mc(m, h), 0).row;
}

int cmd_routing(int64_t m, int32_t h, const std::string& fixture, const Caps& caps) {
    if (fixture == "figure3") {
        const mcg::Figure3 fx = mcg::figure3_fixture();
        const auto rep1 = mcg::validate_routing(fx.graph, fx.r1);
        const auto rep2 = mcg::validate_routing(fx.graph, fx.r2);
        const mcg::LoadProfile l1 = mcg::loads(fx.graph, fx.r1);
        const mcg::LoadProfile l2 = mcg::loads(fx.graph, fx.r2);
        std::cout << "R1: valid=" << rep1.valid << " minimal=" << rep1.minimal << "\n";
        std::cout << "R2: valid=" << rep2.valid << " minimal=" << rep2.minimal << "\n";
        std::cout << "xi(R1)=" << l1.xi_of_r << "\n";
        std::cout << "xi(R2)=" << l2.xi_of_r << "\n";
        std::cout << "R1 vertex loads:\n";
        mcg::write_vertex_loads_csv(std::cout, l1, 1);
        std::cout << "R2 vertex loads:\n";
        mcg::write_vertex_loads_csv(std::cout, l2, 1);
        return 0;
    }
    const mcg::CirculantGraph g = mcg::build_mc(m, h);
    if (g.n > caps.routing_n())
        throw mcg::size_limit_error("routing: n exceeds cap (override with --unsafe-caps)");
    const mcg::LoadProfile lp = mcg::translation_invariant_loads_serial(g);
    std::cout << "xi(R)=" << lp.xi_of_r << "\npi(R)=" << lp.pi_of_r << "\n";
    mcg::write_vertex_loads_csv(std::cout, lp);
    mcg::write_edge_loads_csv(std::cout, lp);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplicative circulant graph analysis"};
    app.require_subcommand(1);

    int64_t m = 2;
    int32_t h = 1;
    int32_t h_max = 1;
    int32_t count = 1;
    int32_t jobs = 1;
    std::string format = "human";
    std::string seq = "a045883";
    std::string fixture;
    Caps caps;

    app.add_flag("--unsafe-caps", caps.unsafe, "disable size caps");

    // --h is taken by the exponent flag, so help is long-form only
    app.set_help_flag("--help", "print help");

    auto add_mh = [&](CLI::App* sub, bool need_h = true) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--m", m, "base m")->check(CLI::IsMember({2, 3}));
        if (need_h) sub->add_option("--h", h, "exponent h")->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "closed-form report for MC(m^h)");
    add_mh(analyze);
    analyze->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "oracle vs recursive vs closed forms");
    verify->add_option("--m", m)->check(CLI::IsMember({2, 3}));
    verify->add_option("--h-max", h_max)->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* rowcmd = app.add_subcommand("row", "first row of the distance matrix");
    add_mh(rowcmd);

    auto* matrix = app.add_subcommand("matrix", "dense distance matrix as CSV");
    add_mh(matrix);

    auto* spectrum = app.add_subcommand("spectrum", "distance matrix eigenvalues as CSV");
    add_mh(spectrum);

    auto* oeis = app.add_subcommand("oeis", "emit OEIS b-file lines");
    oeis->add_option("--seq", seq)->check(CLI::IsMember({"a045883", "a212697"}));
    oeis->add_option("--count", count)->check(CLI::PositiveNumber);

    auto* routing = app.add_subcommand("routing", "routing load tables");
    add_mh(routing);
    routing->add_option("--fixture", fixture)->check(CLI::IsMember({"figure3"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitBadFlags;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(m, h, format, caps);
        if (verify->parsed()) return cmd_verify(m, h_max, jobs, caps);
        if (rowcmd->parsed()) {
            check_h_cap(m, h, caps);
            std::cout << mcg::format_row(row_for(m, h)) << "\n";
            return 0;
        }
        if (matrix->parsed()) {
            check_h_cap(m, h, caps);
            const auto row = row_for(m, h);
            mcg::write_matrix_csv(std::cout, mcg::distance_matrix(row, caps.matrix_n()));
            return 0;
        }
        if (spectrum->parsed()) {
            check_h_cap(m, h, caps);
            const auto row = row_for(m, h);
            if (row.n > caps.spectrum_n())
                throw mcg::size_limit_error("spectrum: n exceeds cap");
            mcg::write_spectrum_csv(std::cout, mcg::circulant_spectrum(row));
            return 0;
        }
        if (oeis->parsed()) {
            if (seq == "a045883")
                mcg::write_bfile(std::cout, mcg::oeis_a045883(count), 0);
            else
                mcg::write_bfile(std::cout, mcg::oeis_a212697(count), 1);
            return 0;
        }
        if (routing->parsed()) return cmd_routing(m, h, fixture, caps);
    } catch (const mcg::size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    }
    return kExitBadFlags;
}
