#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lf/graph.hpp"
#include "lf/partition.hpp"

namespace lf {

enum class ExportMode { inner, repli };

// One partition's training subgraph. Local ids list owned nodes first
// (ascending) then halo nodes (ascending); the graph's external ids give the
// original input ids.
struct PartitionSubgraph {
    Graph graph;
    std::vector<bool> is_halo;  // per local node; all false in inner mode
    NodeId owned_count = 0;
    NodeId partition_index = 0;
};

struct SubgraphBundle {
    ExportMode mode = ExportMode::inner;
    std::vector<PartitionSubgraph> parts;
    NodeId global_node_count = 0;
    NodeId k = 0;
};

// Drops every cross-partition edge: part i is the subgraph induced by block i.
SubgraphBundle export_inner(const Graph& g, const Partition& p);

// Replicates 1-hop boundary neighbors: part i holds block i plus halo copies
// of adjacent nodes owned elsewhere, with the intra-block edges and the
// owned-halo edges. Halo-halo edges are excluded, so every cut edge of g
// appears in exactly the two parts owning its endpoints.
SubgraphBundle export_repli(const Graph& g, const Partition& p);

// Writes one directory per partition under `dir`: an edge list in local ids
// (edges.tsv), a manifest of "local_id global_id owned|halo" lines
// (manifest.tsv), and a key/value metadata file (meta.tsv).
void write_bundle(const SubgraphBundle& bundle, const std::filesystem::path& dir);

}  // namespace lf
