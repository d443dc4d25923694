#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg {

struct McOrigin {
    int64_t base = 0;     // m
    int32_t exponent = 0; // h
};

// Circulant graph Cay(Z_n, S). Jumps are stored folded into [1, n/2],
// strictly increasing. Immutable after construction.
struct CirculantGraph {
    int64_t n = 0;
    std::vector<int64_t> jumps;
    std::optional<McOrigin> origin;
    int32_t regularity = 0;

    bool has_antipodal_jump() const {
        return n % 2 == 0 && !jumps.empty() && jumps.back() == n / 2;
    }
};

// Builds a circulant graph from an arbitrary jump set (folded and validated).
CirculantGraph build_circulant(int64_t n, std::vector<int64_t> jumps);

// Builds the multiplicative circulant graph MC(m^h): n = m^h,
// jumps {m^0, ..., m^{h-1}} folded into [1, n/2].
CirculantGraph build_mc(int64_t m, int32_t h);

// Neighbors of v in the canonical scan order: the largest jump first
// (+ before -), then the remaining jumps ascending, + side first, then
// the - side ascending. Deduplicated; size equals the regularity.
std::vector<int64_t> neighbors(const CirculantGraph& g, int64_t v);

// Signed jump offsets in the same canonical order, as (offset mod n).
// neighbors(g, v)[i] == (v + scan_offsets(g)[i]) mod n.
std::vector<int64_t> scan_offsets(const CirculantGraph& g);

// |E| = n * r / 2.
int64_t edge_count(const CirculantGraph& g);

bool is_connected_jump_set(int64_t n, const std::vector<int64_t>& jumps);

} // namespace mcg
