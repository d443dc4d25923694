#include "mcg/circulant.hpp"

#include <algorithm>
#include <numeric>

namespace mcg {

bool is_connected_jump_set(int64_t n, const std::vector<int64_t>& jumps) {
    int64_t g = n;
    for (int64_t j : jumps) g = std::gcd(g, j);
    return g == 1;
}

CirculantGraph build_circulant(int64_t n, std::vector<int64_t> jumps) {
    if (n < 2) throw domain_error("circulant graph needs n >= 2");
    for (int64_t& j : jumps) {
        j = ((j % n) + n) % n;
        if (j == 0) throw domain_error("jump congruent to 0 mod n");
        if (j > n / 2) j = n - j; // fold
    }
    std::sort(jumps.begin(), jumps.end());
    jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());

    CirculantGraph g;
    g.n = n;
    g.jumps = std::move(jumps);
    int32_t r = static_cast<int32_t>(2 * g.jumps.size());
    if (g.has_antipodal_jump()) r -= 1;
    g.regularity = r;
    return g;
}

CirculantGraph build_mc(int64_t m, int32_t h) {
    if (m < 2 || h < 1) throw domain_error("MC graph requires m >= 2 and h >= 1");
    int64_t n = 1;
    std::vector<int64_t> jumps;
    jumps.reserve(h);
    for (int32_t i = 0; i < h; ++i) {
        jumps.push_back(n);
        if (n > (INT64_MAX / m)) throw size_limit_error("m^h overflows 64-bit vertex ids");
        n *= m;
    }
    CirculantGraph g = build_circulant(n, std::move(jumps));
    g.origin = McOrigin{m, h};
    return g;
}

std::vector<int64_t> scan_offsets(const CirculantGraph& g) {
    std::vector<int64_t> offs;
    offs.reserve(2 * g.jumps.size());
    auto push = [&](int64_t o) {
        o = ((o % g.n) + g.n) % g.n;
        if (std::find(offs.begin(), offs.end(), o) == offs.end()) offs.push_back(o);
    };
    if (!g.jumps.empty()) {
        int64_t top = g.jumps.back();
        push(top);
        push(-top);
        for (size_t i = 0; i + 1 < g.jumps.size(); ++i) push(g.jumps[i]);
        for (size_t i = 0; i + 1 < g.jumps.size(); ++i) push(-g.jumps[i]);
    }
    return offs;
}

std::vector<int64_t> neighbors(const CirculantGraph& g, int64_t v) {
    if (v < 0 || v >= g.n) throw domain_error("vertex id out of range");
    std::vector<int64_t> out;
    for (int64_t o : scan_offsets(g)) out.push_back((v + o) % g.n);
    return out;
}

int64_t edge_count(const CirculantGraph& g) {
    return g.n * g.regularity / 2;
}

} // namespace mcg
