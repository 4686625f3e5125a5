#pragma once

#include <cstdint>

#include "lf/graph.hpp"
#include "lf/partition.hpp"

namespace lf {

struct LeidenConfig {
    double resolution = 1.0;                  // gamma
    std::uint64_t max_community_size = 0;     // S, hard cap in nodes; must be >= 1
    std::uint32_t seed = 42;
    std::uint32_t max_passes = 10;            // local-move passes per level
    double min_gain = 1e-9;                   // convergence threshold per pass
};

// Modularity Q = sum_c [ e_c/m - gamma * (K_c/(2m))^2 ], where e_c counts the
// internal edges of block c and K_c sums the degrees of its nodes.
double modularity(const Graph& g, const Partition& p, double resolution);

// Exact modularity change for moving v into `target`. Passing
// target == p.block_count() means a fresh singleton block.
double move_gain(const Graph& g, const Partition& p, NodeId v, NodeId target, double resolution);

// Size-capped community detection: local moving with randomized node order,
// refinement into connected sub-communities, and graph aggregation, with the
// cap enforced as a hard constraint on every move and merge. Output blocks
// are connected, non-empty, and hold at most max_community_size nodes.
// Deterministic for a fixed seed. Refuses disconnected graphs.
Partition leiden_communities(const Graph& g, const LeidenConfig& cfg);

}  // namespace lf
