#include "mcg/distance.hpp"

#include <algorithm>
#include <string>

namespace mcg {

void DistanceRow::finalize() {
    transmission = 0;
    diameter = 0;
    for (int32_t d : dist) {
        transmission += d;
        diameter = std::max(diameter, d);
    }
}

namespace {

int64_t ipow(int64_t base, int32_t exp) {
    int64_t v = 1;
    for (int32_t i = 0; i < exp; ++i) v *= base;
    return v;
}

void assign_parts(const CirculantGraph& g, BfsTree& tree) {
    if (!g.origin) return;
    const int64_t m = g.origin->base;
    const int32_t h = g.origin->exponent;
    tree.part.assign(g.n, TreePart::Root);
    if (m == 2) {
        const int64_t left_max = h >= 2 ? ipow(2, h - 2) : 0;
        const auto th = thresholds_base2(h);
        for (int64_t v = 1; v < g.n; ++v) {
            if (v <= left_max) tree.part[v] = TreePart::Left;
            else if (v <= th.max_lm) tree.part[v] = TreePart::Middle;
            else tree.part[v] = TreePart::Right;
        }
    } else {
        // odd base: no middle part, split at the half point
        for (int64_t v = 1; v < g.n; ++v)
            tree.part[v] = v <= g.n / 2 ? TreePart::Left : TreePart::Right;
    }
}

} // namespace

BfsResult bfs_distances(const CirculantGraph& g, int64_t source) {
    if (source < 0 || source >= g.n) throw domain_error("source vertex out of range");

    BfsResult res;
    res.tree.root = source;
    res.tree.parent.assign(g.n, -1);
    res.tree.level.assign(g.n, -1);
    res.tree.level[source] = 0;

    const auto offs = scan_offsets(g);
    std::vector<int64_t> frontier{source}, next;
    int32_t depth = 0;
    while (!frontier.empty()) {
        next.clear();
        ++depth;
        for (int64_t v : frontier) {
            for (int64_t o : offs) {
                int64_t w = v + o;
                if (w >= g.n) w -= g.n;
                if (res.tree.level[w] < 0) {
                    res.tree.level[w] = depth;
                    res.tree.parent[w] = v;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }

    res.row.n = g.n;
    res.row.dist.assign(g.n, 0);
    for (int64_t v = 0; v < g.n; ++v) {
        if (res.tree.level[v] < 0) res.unreachable.push_back(v);
        else res.row.dist[v] = res.tree.level[v];
    }
    res.row.finalize();
    assign_parts(g, res.tree);
    return res;
}

Base2Thresholds thresholds_base2(int32_t h) {
    if (h < 1) throw domain_error("thresholds_base2 requires h >= 1");
    // max[L u M] = (2^{h+1} - 2)/3 for even h, (2^{h+1} - 1)/3 for odd h
    const int64_t pow2 = ipow(2, h + 1);
    Base2Thresholds th;
    th.max_lm = (pow2 - (h % 2 == 0 ? 2 : 1)) / 3;
    if (h >= 2) th.min_r = th.max_lm + 1;
    return th;
}

DistanceRow extend_row_base2(const DistanceRow& prev, int32_t h) {
    if (h < 2) throw domain_error("extend_row_base2 requires h >= 2");
    const int64_t half_n = ipow(2, h - 1);
    if (prev.n != half_n)
        throw domain_error("extend_row_base2: prev row has n=" + std::to_string(prev.n) +
                           ", expected " + std::to_string(half_n));

    // Copy up to the previous tree's max[L u M]; everything from there to the
    // new antipode (which folds onto the previous row's origin) descends by 1.
    const int64_t copy_max = thresholds_base2(h - 1).max_lm;
    std::vector<int32_t> half(half_n + 1);
    for (int64_t j = 0; j <= half_n; ++j) {
        if (j <= copy_max) half[j] = prev.dist[j];
        else half[j] = prev.dist[j % prev.n] + 1;
    }
    return mirror_symmetry(half, 2 * half_n);
}

DistanceRow extend_row_base3(const DistanceRow& prev, int32_t h) {
    if (h < 2) throw domain_error("extend_row_base3 requires h >= 2");
    const int64_t prev_n = ipow(3, h - 1);
    if (prev.n != prev_n)
        throw domain_error("extend_row_base3: prev row has n=" + std::to_string(prev.n) +
                           ", expected " + std::to_string(prev_n));

    const int64_t n = 3 * prev_n;
    const int64_t mid = (prev_n - 1) / 2;
    std::vector<int32_t> half(n / 2 + 1);
    for (int64_t j = 0; j <= mid; ++j) half[j] = prev.dist[j];
    for (int64_t j = mid + 1; j < prev_n; ++j) half[j] = prev.dist[j] + 1;
    for (int64_t j = 0; j <= mid; ++j) half[prev_n + j] = prev.dist[j] + 1;
    return mirror_symmetry(half, n);
}

DistanceRow recursive_row(int64_t m, int32_t h) {
    if (h < 1) throw domain_error("recursive_row requires h >= 1");
    DistanceRow row;
    if (m == 2) {
        if (h > kHCapBase2) throw size_limit_error("recursive_row: h exceeds base-2 cap");
        row.n = 2;
        row.dist = {0, 1};
        for (int32_t k = 2; k <= h; ++k) row = extend_row_base2(row, k);
    } else if (m == 3) {
        if (h > kHCapBase3) throw size_limit_error("recursive_row: h exceeds base-3 cap");
        row.n = 3;
        row.dist = {0, 1, 1};
        for (int32_t k = 2; k <= h; ++k) row = extend_row_base3(row, k);
    } else {
        throw domain_error("recursive_row supports bases 2 and 3 only");
    }
    row.finalize();
    return row;
}

DistanceRow mirror_symmetry(const std::vector<int32_t>& half, int64_t n) {
    if (static_cast<int64_t>(half.size()) != n / 2 + 1)
        throw domain_error("mirror_symmetry: half row must cover 0..floor(n/2)");
    DistanceRow row;
    row.n = n;
    row.dist.assign(n, 0);
    for (int64_t j = 0; j <= n / 2; ++j) row.dist[j] = half[j];
    for (int64_t j = 1; j < (n + 1) / 2; ++j) row.dist[n - j] = half[j];
    row.finalize();
    return row;
}

int32_t diameter_of(const DistanceRow& row) {
    int32_t d = 0;
    for (int32_t v : row.dist) d = std::max(d, v);
    return d;
}

std::vector<std::vector<int32_t>> distance_matrix(const DistanceRow& row, int64_t cap) {
    if (row.n > cap)
        throw size_limit_error("distance_matrix: n=" + std::to_string(row.n) +
                               " exceeds dense cap " + std::to_string(cap) +
                               "; use row-based workflows instead");
    const int64_t n = row.n;
    std::vector<std::vector<int32_t>> m(n, std::vector<int32_t>(n));
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j)
            m[i][j] = row.dist[((j - i) % n + n) % n];
    return m;
}

std::vector<DistanceRow> all_rows_serial(const CirculantGraph& g) {
    std::vector<DistanceRow> rows(g.n);
    for (int64_t s = 0; s < g.n; ++s) rows[s] = bfs_distances(g, s).row;
    return rows;
}

std::vector<DistanceRow> all_rows_parallel(const CirculantGraph& g) {
    std::vector<DistanceRow> rows(g.n);
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t s = 0; s < g.n; ++s) rows[s] = bfs_distances(g, s).row;
    return rows;
}

} // namespace mcg
