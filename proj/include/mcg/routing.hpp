#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcg/circulant.hpp"
#include "mcg/distance.hpp"

namespace mcg {

// Small undirected simple graph for routing work. Vertices are 0..n-1.
struct Graph {
    int64_t n = 0;
    std::vector<std::vector<int64_t>> adj;

    static Graph from_edges(int64_t n, const std::vector<std::pair<int64_t, int64_t>>& edges);
    static Graph from_circulant(const CirculantGraph& g);

    bool has_edge(int64_t u, int64_t v) const;
    std::vector<int32_t> bfs_dist(int64_t source) const;
};

using Path = std::vector<int64_t>;

// Routing: one elementary path per ordered pair (x, y), x != y.
struct Routing {
    int64_t n = 0;
    std::vector<Path> paths; // indexed x*n + y; empty at x == y

    const Path& at(int64_t x, int64_t y) const { return paths[x * n + y]; }
    Path& at(int64_t x, int64_t y) { return paths[x * n + y]; }
};

struct ValidationReport {
    bool valid = false;
    bool minimal = false;
    bool symmetric = false;
    std::vector<std::string> violations;
};
ValidationReport validate_routing(const Graph& g, const Routing& r);

struct LoadProfile {
    std::vector<int64_t> vertex_load;                       // xi_x(Gamma, R)
    std::map<std::pair<int64_t, int64_t>, int64_t> edge_load; // keyed (min,max)
    int64_t xi_of_r = 0;
    int64_t pi_of_r = 0;
};
LoadProfile vertex_loads(const Graph& g, const Routing& r);
LoadProfile edge_loads(const Graph& g, const Routing& r);
LoadProfile loads(const Graph& g, const Routing& r); // both parts at once

// Minimal symmetric-by-shift routing on a circulant graph: fix the BFS-tree
// path from 0 to each target and translate it to every source.
Routing translation_invariant_routing(const CirculantGraph& g, int64_t cap = 1024);

// Loads of the translation-invariant routing without materializing paths.
// The parallel version shards sources across threads and merges by addition;
// results are identical to the serial version.
LoadProfile translation_invariant_loads_serial(const CirculantGraph& g);
LoadProfile translation_invariant_loads_parallel(const CirculantGraph& g);

// The 6-vertex worked example: graph, a minimal routing R1 and a
// non-minimal routing R2. Vertex i here carries printed label i+1.
struct Figure3 {
    Graph graph;
    Routing r1;
    Routing r2;
};
Figure3 figure3_fixture();

} // namespace mcg
