#include "mcg/routing.hpp"

#include <algorithm>
#include <queue>

namespace mcg {

Graph Graph::from_edges(int64_t n, const std::vector<std::pair<int64_t, int64_t>>& edges) {
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw domain_error("edge endpoint out of range");
        if (u == v) throw domain_error("loops are not allowed");
        if (g.has_edge(u, v)) throw domain_error("duplicate edge");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph Graph::from_circulant(const CirculantGraph& cg) {
    Graph g;
    g.n = cg.n;
    g.adj.assign(cg.n, {});
    for (int64_t v = 0; v < cg.n; ++v) g.adj[v] = neighbors(cg, v);
    return g;
}

bool Graph::has_edge(int64_t u, int64_t v) const {
    const auto& nbrs = adj[u];
    return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

std::vector<int32_t> Graph::bfs_dist(int64_t source) const {
    std::vector<int32_t> dist(n, -1);
    dist[source] = 0;
    std::queue<int64_t> q;
    q.push(source);
    while (!q.empty()) {
        int64_t v = q.front();
        q.pop();
        for (int64_t w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

ValidationReport validate_routing(const Graph& g, const Routing& r) {
    ValidationReport rep;
    rep.minimal = true;
    rep.symmetric = true;
    if (r.n != g.n) {
        rep.violations.push_back("routing vertex count differs from graph");
        return rep;
    }

    std::vector<std::vector<int32_t>> dist(g.n);
    for (int64_t s = 0; s < g.n; ++s) dist[s] = g.bfs_dist(s);

    std::vector<char> seen(g.n, 0);
    for (int64_t x = 0; x < g.n; ++x) {
        for (int64_t y = 0; y < g.n; ++y) {
            if (x == y) continue;
            const Path& p = r.at(x, y);
            const std::string tag = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
            if (p.empty()) {
                rep.violations.push_back("missing path for ordered pair " + tag);
                continue;
            }
            if (p.front() != x || p.back() != y)
                rep.violations.push_back("path for " + tag + " has wrong endpoints");
            bool ok = true;
            std::fill(seen.begin(), seen.end(), 0);
            for (size_t i = 0; i < p.size(); ++i) {
                if (p[i] < 0 || p[i] >= g.n) {
                    rep.violations.push_back("path for " + tag + " leaves the vertex set");
                    ok = false;
                    break;
                }
                if (seen[p[i]]) {
                    rep.violations.push_back("path for " + tag + " repeats vertex " +
                                             std::to_string(p[i]));
                    ok = false;
                    break;
                }
                seen[p[i]] = 1;
                if (i > 0 && !g.has_edge(p[i - 1], p[i])) {
                    rep.violations.push_back("path for " + tag + " uses the non-edge (" +
                                             std::to_string(p[i - 1]) + "," +
                                             std::to_string(p[i]) + ")");
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (static_cast<int32_t>(p.size()) - 1 != dist[x][y]) rep.minimal = false;
            const Path& back = r.at(y, x);
            if (back.size() != p.size() ||
                !std::equal(p.begin(), p.end(), back.rbegin()))
                rep.symmetric = false;
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

namespace {

void require_valid(const Graph& g, const Routing& r) {
    auto rep = validate_routing(g, r);
    if (!rep.valid)
        throw domain_error("invalid routing: " + rep.violations.front());
}

void accumulate(const Path& p, std::vector<int64_t>& vload,
                std::map<std::pair<int64_t, int64_t>, int64_t>& eload) {
    for (size_t i = 1; i + 1 < p.size(); ++i) ++vload[p[i]];
    for (size_t i = 1; i < p.size(); ++i) {
        const int64_t a = p[i - 1], b = p[i];
        ++eload[{std::min(a, b), std::max(a, b)}];
    }
}

LoadProfile finalize_profile(LoadProfile lp) {
    lp.xi_of_r = 0;
    for (int64_t v : lp.vertex_load) lp.xi_of_r = std::max(lp.xi_of_r, v);
    lp.pi_of_r = 0;
    for (const auto& [e, l] : lp.edge_load) lp.pi_of_r = std::max(lp.pi_of_r, l);
    return lp;
}

} // namespace

LoadProfile loads(const Graph& g, const Routing& r) {
    require_valid(g, r);
    LoadProfile lp;
    lp.vertex_load.assign(g.n, 0);
    for (int64_t x = 0; x < g.n; ++x)
        for (int64_t y = 0; y < g.n; ++y)
            if (x != y) accumulate(r.at(x, y), lp.vertex_load, lp.edge_load);
    return finalize_profile(std::move(lp));
}

LoadProfile vertex_loads(const Graph& g, const Routing& r) { return loads(g, r); }
LoadProfile edge_loads(const Graph& g, const Routing& r) { return loads(g, r); }

Routing translation_invariant_routing(const CirculantGraph& g, int64_t cap) {
    if (g.n > cap)
        throw size_limit_error("translation_invariant_routing: n exceeds path-table cap " +
                               std::to_string(cap));
    const BfsResult bfs = bfs_distances(g, 0);
    if (!bfs.unreachable.empty())
        throw domain_error("translation_invariant_routing requires a connected graph");

    // Canonical shortest path 0 -> t from the oracle's parent pointers.
    std::vector<Path> base(g.n);
    for (int64_t t = 1; t < g.n; ++t) {
        Path p;
        for (int64_t v = t; v != 0; v = bfs.tree.parent[v]) p.push_back(v);
        p.push_back(0);
        std::reverse(p.begin(), p.end());
        base[t] = std::move(p);
    }

    Routing r;
    r.n = g.n;
    r.paths.assign(g.n * g.n, {});
    for (int64_t x = 0; x < g.n; ++x)
        for (int64_t t = 1; t < g.n; ++t) {
            Path p = base[t];
            for (int64_t& v : p) v = (v + x) % g.n;
            r.at(x, p.back()) = std::move(p);
        }
    return r;
}

namespace {

LoadProfile shift_routing_loads(const CirculantGraph& g, bool parallel) {
    const BfsResult bfs = bfs_distances(g, 0);
    if (!bfs.unreachable.empty())
        throw domain_error("translation-invariant loads require a connected graph");

    std::vector<Path> base(g.n);
    for (int64_t t = 1; t < g.n; ++t) {
        Path p;
        for (int64_t v = t; v != 0; v = bfs.tree.parent[v]) p.push_back(v);
        p.push_back(0);
        std::reverse(p.begin(), p.end());
        base[t] = std::move(p);
    }

    // Flat per-vertex and per-directed-slot edge accumulators; edge (u,v)
    // normalized to min endpoint with its offset index.
    const int64_t n = g.n;
    std::vector<int64_t> vload(n, 0);
    std::vector<int64_t> eload(n * static_cast<int64_t>(g.jumps.size()), 0);
    auto edge_slot = [&](int64_t u, int64_t v) {
        int64_t d = (v - u + n) % n;
        int64_t lo = u;
        if (d > n / 2) {
            d = n - d;
            lo = v;
        }
        auto it = std::lower_bound(g.jumps.begin(), g.jumps.end(), d);
        return (it - g.jumps.begin()) * n + lo;
    };

    auto run = [&](int64_t x, std::vector<int64_t>& vl, std::vector<int64_t>& el) {
        for (int64_t t = 1; t < n; ++t) {
            const Path& p = base[t];
            for (size_t i = 1; i + 1 < p.size(); ++i) ++vl[(p[i] + x) % n];
            for (size_t i = 1; i < p.size(); ++i)
                ++el[edge_slot((p[i - 1] + x) % n, (p[i] + x) % n)];
        }
    };

    if (parallel) {
#pragma omp parallel
        {
            std::vector<int64_t> vl(n, 0), el(eload.size(), 0);
#pragma omp for schedule(static) nowait
            for (int64_t x = 0; x < n; ++x) run(x, vl, el);
#pragma omp critical
            {
                for (int64_t i = 0; i < n; ++i) vload[i] += vl[i];
                for (size_t i = 0; i < eload.size(); ++i) eload[i] += el[i];
            }
        }
    } else {
        for (int64_t x = 0; x < n; ++x) run(x, vload, eload);
    }

    LoadProfile lp;
    lp.vertex_load = std::move(vload);
    for (size_t ji = 0; ji < g.jumps.size(); ++ji) {
        const int64_t j = g.jumps[ji];
        // the antipodal jump contributes two slots per edge; the map key merges them
        for (int64_t lo = 0; lo < n; ++lo) {
            const int64_t load = eload[static_cast<int64_t>(ji) * n + lo];
            if (load == 0) continue;
            const int64_t hi = (lo + j) % n;
            lp.edge_load[{std::min(lo, hi), std::max(lo, hi)}] += load;
        }
    }
    return finalize_profile(std::move(lp));
}

} // namespace

LoadProfile translation_invariant_loads_serial(const CirculantGraph& g) {
    return shift_routing_loads(g, false);
}

LoadProfile translation_invariant_loads_parallel(const CirculantGraph& g) {
    return shift_routing_loads(g, true);
}

namespace {

// Paths below use the printed 1-based labels; shifted to 0-based ids.
Routing routing_from_paths(int64_t n, const std::vector<Path>& labeled) {
    Routing r;
    r.n = n;
    r.paths.assign(n * n, {});
    for (const Path& lp : labeled) {
        Path p = lp;
        for (int64_t& v : p) v -= 1;
        r.at(p.front(), p.back()) = p;
    }
    return r;
}

} // namespace

Figure3 figure3_fixture() {
    Figure3 fx;
    fx.graph = Graph::from_edges(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {4, 5}});

    fx.r1 = routing_from_paths(
        6, {{1, 2},    {1, 3},    {1, 4},    {1, 2, 5}, {1, 3, 6},
            {2, 1},    {2, 1, 3}, {2, 4},    {2, 5},    {2, 5, 6},
            {3, 1},    {3, 1, 2}, {3, 4},    {3, 6, 5}, {3, 6},
            {4, 1},    {4, 2},    {4, 3},    {4, 2, 5}, {4, 3, 6},
            {5, 2, 1}, {5, 2},    {5, 6, 3}, {5, 2, 4}, {5, 6},
            {6, 3, 1}, {6, 5, 2}, {6, 3},    {6, 3, 4}, {6, 5}});

    fx.r2 = routing_from_paths(
        6, {{1, 4, 2},       {1, 3},          {1, 4},    {1, 3, 6, 5}, {1, 3, 6},
            {2, 1},          {2, 1, 3},       {2, 4},    {2, 5},       {2, 1, 3, 6},
            {3, 1},          {3, 1, 2},       {3, 4},    {3, 4, 1, 2, 5}, {3, 6},
            {4, 1},          {4, 2},          {4, 3},    {4, 3, 6, 5}, {4, 3, 6},
            {5, 2, 1},       {5, 6, 3, 1, 2}, {5, 6, 3}, {5, 2, 4},    {5, 6},
            {6, 3, 1},       {6, 5, 2},       {6, 3},    {6, 3, 4},    {6, 3, 4, 2, 5}});
    return fx;
}

} // namespace mcg
