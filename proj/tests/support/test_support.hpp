#pragma once

// Graph builders, random generators, and independent oracles shared by the
// unit and acceptance suites. Oracles deliberately avoid the library's code
// paths: components use union-find (the library BFS), cuts and metrics are
// naive per-definition recounts.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lf/graph.hpp"
#include "lf/partition.hpp"
#include "lf/rng.hpp"

namespace lf::test {

// --- fixed fixtures ---------------------------------------------------------

inline Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Graph four_cycle() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph barbell() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

inline Graph two_disjoint_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

// Star K_{1,3}: center 0 with leaves 1..3.
inline Graph star4() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Four triangles in a ring, consecutive triangles joined by one edge.
// Triangle t holds nodes 3t..3t+2; the joining edge is (3t+2, 3t+3 mod 12).
inline Graph ring_of_four_triangles() {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId t = 0; t < 4; ++t) {
        const NodeId base = 3 * t;
        edges.push_back({base, base + 1});
        edges.push_back({base + 1, base + 2});
        edges.push_back({base, base + 2});
        edges.push_back({base + 2, static_cast<NodeId>((base + 3) % 12)});
    }
    return Graph::from_edges(12, std::move(edges));
}

inline Graph load_fixture(const std::string& name) {
    std::ifstream in(std::string(LF_TEST_DATA_DIR) + "/" + name);
    return load_edge_list(in).graph;
}

// --- random generators ------------------------------------------------------

inline Graph random_connected_graph(NodeId n, double avg_degree, std::mt19937& rng) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(bounded_uint(rng, v), v);

    const std::uint64_t target =
        std::max<std::uint64_t>(n - 1, static_cast<std::uint64_t>(n * avg_degree / 2.0));
    std::set<std::pair<NodeId, NodeId>> seen(edges.begin(), edges.end());
    for (std::uint64_t attempt = 0; attempt < 20 * target && seen.size() < target; ++attempt) {
        NodeId u = bounded_uint(rng, n), v = bounded_uint(rng, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.insert({u, v}).second) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

// Possibly disconnected uniform random graph.
inline Graph random_graph(NodeId n, std::uint64_t m, std::mt19937& rng) {
    std::set<std::pair<NodeId, NodeId>> seen;
    for (std::uint64_t attempt = 0; attempt < 20 * m + 100 && seen.size() < m; ++attempt) {
        NodeId u = bounded_uint(rng, n), v = bounded_uint(rng, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        seen.insert({u, v});
    }
    return Graph::from_edges(n, {seen.begin(), seen.end()});
}

inline Partition random_labels(NodeId n, NodeId k, std::mt19937& rng) {
    std::vector<NodeId> labels(n);
    for (auto& l : labels) l = bounded_uint(rng, k);
    return Partition(std::move(labels), k);
}

// --- oracles ----------------------------------------------------------------

struct UnionFind {
    std::vector<NodeId> parent;
    explicit UnionFind(NodeId n) : parent(n) { std::iota(parent.begin(), parent.end(), NodeId{0}); }
    NodeId find(NodeId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(NodeId a, NodeId b) { parent[find(a)] = find(b); }
};

inline NodeId oracle_component_count(const Graph& g) {
    UnionFind uf(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w) uf.unite(v, w);
    std::set<NodeId> roots;
    for (NodeId v = 0; v < g.node_count(); ++v) roots.insert(uf.find(v));
    return static_cast<NodeId>(roots.size());
}

inline std::uint64_t oracle_cut(const Graph& g, const Partition& p) {
    std::uint64_t cut = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w && p.block_of(v) != p.block_of(w)) ++cut;
    return cut;
}

inline std::uint64_t oracle_pair_cut(const Graph& g, const std::vector<NodeId>& label, NodeId a,
                                     NodeId b) {
    std::uint64_t cut = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w &&
                ((label[v] == a && label[w] == b) || (label[v] == b && label[w] == a)))
                ++cut;
    return cut;
}

// Blocks of p restricted to one block id, as an explicit member list.
inline std::vector<NodeId> block_nodes(const Partition& p, NodeId b) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < p.node_count(); ++v)
        if (p.block_of(v) == b) out.push_back(v);
    return out;
}

// Per-block component count computed with union-find on the fly.
inline std::vector<NodeId> oracle_block_components(const Graph& g, const Partition& p) {
    UnionFind uf(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w && p.block_of(v) == p.block_of(w)) uf.unite(v, w);
    std::vector<std::set<NodeId>> roots(p.block_count());
    for (NodeId v = 0; v < g.node_count(); ++v) roots[p.block_of(v)].insert(uf.find(v));
    std::vector<NodeId> counts(p.block_count());
    for (NodeId b = 0; b < p.block_count(); ++b)
        counts[b] = static_cast<NodeId>(roots[b].size());
    return counts;
}

inline std::vector<std::uint64_t> oracle_block_isolated(const Graph& g, const Partition& p) {
    std::vector<std::uint64_t> counts(p.block_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint64_t in_block = 0;
        for (NodeId w : g.neighbors(v))
            if (p.block_of(w) == p.block_of(v)) ++in_block;
        if (in_block == 0) ++counts[p.block_of(v)];
    }
    return counts;
}

// True iff every block of p induces exactly one connected component and has
// no node without an in-block neighbor: the structural guarantee.
inline bool structurally_sound(const Graph& g, const Partition& p) {
    const auto components = oracle_block_components(g, p);
    for (NodeId b = 0; b < p.block_count(); ++b)
        if (components[b] != 1) return false;
    for (std::uint64_t count : oracle_block_isolated(g, p))
        if (count != 0) return false;
    return true;
}

// All set partitions of {0..n-1} as restricted growth strings; n <= 10.
inline std::vector<std::vector<NodeId>> all_set_partitions(NodeId n) {
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> labels(n, 0);
    auto recurse = [&](auto&& self, NodeId v, NodeId max_used) -> void {
        if (v == n) {
            out.push_back(labels);
            return;
        }
        for (NodeId b = 0; b <= max_used + 1 && b < n; ++b) {
            labels[v] = b;
            self(self, v + 1, std::max(max_used, b));
        }
    };
    if (n > 0) {
        labels[0] = 0;
        recurse(recurse, 1, 0);
    }
    return out;
}

}  // namespace lf::test
