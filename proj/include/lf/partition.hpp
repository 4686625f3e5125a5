#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lf/graph.hpp"

namespace lf {

// Total assignment of nodes to blocks. Block ids are dense in
// 0..block_count-1; blocks may be empty (label-propagation output keeps its
// declared label range even when labels die out).
class Partition {
public:
    Partition() = default;
    Partition(std::vector<NodeId> block_of, NodeId block_count);

    // Densifies arbitrary labels in order of first appearance (equivalently,
    // by smallest contained node). The result has no empty blocks.
    static Partition from_labels(std::span<const NodeId> labels);
    static Partition singletons(NodeId n);

    NodeId block_of(NodeId v) const { return block_of_[v]; }
    NodeId block_count() const { return block_count_; }
    NodeId node_count() const { return static_cast<NodeId>(block_of_.size()); }
    std::uint64_t block_size(NodeId b) const { return block_sizes_[b]; }
    const std::vector<NodeId>& labels() const { return block_of_; }
    const std::vector<std::uint64_t>& block_sizes() const { return block_sizes_; }

    // Per-block node lists, ascending within each block.
    std::vector<std::vector<NodeId>> block_members() const;

private:
    std::vector<NodeId> block_of_;
    std::vector<std::uint64_t> block_sizes_;
    NodeId block_count_ = 0;
};

// Number of edges with both endpoints in the same block, per block.
std::vector<std::uint64_t> internal_edge_counts(const Graph& g, const Partition& p);

// Edges whose endpoints lie in different blocks, each counted once.
std::uint64_t cross_block_edges(const Graph& g, const Partition& p);

}  // namespace lf
