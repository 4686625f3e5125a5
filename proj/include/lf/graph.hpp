#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lf/error.hpp"

namespace lf {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

// Immutable undirected graph in compressed adjacency form. Each undirected
// edge is stored in both directions; neighbor lists are sorted, free of
// self-loops and duplicates. Safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // Builds a graph over nodes 0..n-1 from an undirected edge list.
    // Self-loops are dropped and parallel edges deduplicated. External ids
    // default to the identity mapping.
    static Graph from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges);

    NodeId node_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    NodeId degree(NodeId v) const { return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]); }

    // Original (input-file) id of a node. Identity unless set by the loader
    // or composed through induced_subgraph.
    std::uint64_t external_id(NodeId v) const { return external_ids_[v]; }
    const std::vector<std::uint64_t>& external_ids() const { return external_ids_; }
    void set_external_ids(std::vector<std::uint64_t> ids);

private:
    NodeId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;       // n+1
    std::vector<NodeId> adj_;                  // 2m, sorted per node
    std::vector<std::uint64_t> external_ids_;  // n
};

// Subset of a graph's nodes; members kept sorted and unique.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<NodeId> members);

    bool contains(NodeId v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const NodeId> members() const { return members_; }

private:
    std::vector<NodeId> members_;
};

struct ComponentLabeling {
    std::vector<NodeId> component_of;  // per node, dense ids
    NodeId component_count = 0;        // ids ordered by smallest contained node
};

struct EdgeListOptions {
    // true: every line is an undirected edge. false: the file must list both
    // orientations of every edge; asymmetric input is an error.
    bool symmetrize = true;
    // true: self-loop lines are dropped (counted). false: they are an error.
    bool skip_self_loops = true;
};

struct LoadResult {
    Graph graph;
    std::uint64_t dropped_self_loops = 0;
    std::uint64_t dropped_duplicates = 0;
};

// Parses whitespace-separated "u v" / "u v w" lines with '#' comments.
// Weights are validated and discarded. Node ids are compacted to 0..n-1 in
// ascending order of external id; the external ids are retained on the graph.
LoadResult load_edge_list(std::istream& source, const EdgeListOptions& options = {});

// Subgraph induced by `nodes`: exactly the edges of g with both endpoints
// inside. Local ids are assigned in ascending order of the parent node id,
// i.e. local i corresponds to nodes.members()[i]; external ids compose.
Graph induced_subgraph(const Graph& g, const NodeSet& nodes);

ComponentLabeling connected_components(const Graph& g);

inline bool is_connected(const Graph& g) { return connected_components(g).component_count <= 1; }

// Number of undirected edges with one endpoint in a and the other in b.
// The sets must be disjoint.
std::uint64_t cut_edges(const Graph& g, const NodeSet& a, const NodeSet& b);

// Canonical serialization: sorted "u v" lines with u < v, internal ids.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lf
