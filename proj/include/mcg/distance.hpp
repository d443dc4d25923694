#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcg/circulant.hpp"

namespace mcg {

// First row of the circulant distance matrix: dist[j] = d(0, j).
struct DistanceRow {
    int64_t n = 0;
    std::vector<int32_t> dist;
    int64_t transmission = 0;
    int32_t diameter = 0;

    void finalize(); // recompute transmission and diameter from dist
};

enum class TreePart : uint8_t { Root, Left, Middle, Right };

struct BfsTree {
    int64_t root = 0;
    std::vector<int64_t> parent; // -1 for root / unreachable
    std::vector<int32_t> level;  // -1 for unreachable
    std::vector<TreePart> part;  // empty when the graph has no MC origin
};

struct BfsResult {
    DistanceRow row;
    BfsTree tree;
    std::vector<int64_t> unreachable; // non-empty only for disconnected jump sets
};

// Single-source BFS under the canonical scan order. The oracle every other
// distance computation is checked against.
BfsResult bfs_distances(const CirculantGraph& g, int64_t source);

// max[L u M] and min[R] of the base-2 BFS tree. min[R] is absent for h = 1.
struct Base2Thresholds {
    int64_t max_lm = 0;
    std::optional<int64_t> min_r;
};
Base2Thresholds thresholds_base2(int32_t h);

// One step of the recursive row construction: row of MC(2^{h-1}) -> MC(2^h).
DistanceRow extend_row_base2(const DistanceRow& prev, int32_t h);

// One step for base 3: row of MC(3^{h-1}) -> MC(3^h).
DistanceRow extend_row_base3(const DistanceRow& prev, int32_t h);

// Full row via the recursive construction from the base case (h=1).
DistanceRow recursive_row(int64_t m, int32_t h);

// Completes a row from its first half: dist[n-j] := dist[j].
// `half` must hold entries 0 .. floor(n/2).
DistanceRow mirror_symmetry(const std::vector<int32_t>& half, int64_t n);

int32_t diameter_of(const DistanceRow& row);

// Dense circulant distance matrix M[i][j] = dist[(j-i) mod n].
std::vector<std::vector<int32_t>> distance_matrix(const DistanceRow& row,
                                                  int64_t cap = 4096);

// Distance rows from every source. Parallel version shards sources across
// threads; result is identical to the serial one.
std::vector<DistanceRow> all_rows_serial(const CirculantGraph& g);
std::vector<DistanceRow> all_rows_parallel(const CirculantGraph& g);

// Default exponent caps for row construction.
inline constexpr int32_t kHCapBase2 = 22;
inline constexpr int32_t kHCapBase3 = 14;

} // namespace mcg
