#include "lf/partition.hpp"

#include <numeric>

namespace lf {

Partition::Partition(std::vector<NodeId> block_of, NodeId block_count)
    : block_of_(std::move(block_of)), block_count_(block_count) {
    block_sizes_.assign(block_count_, 0);
    for (NodeId b : block_of_) {
        if (b >= block_count_) fail(Errc::invalid_argument, "block id out of range");
        ++block_sizes_[b];
    }
}

Partition Partition::from_labels(std::span<const NodeId> labels) {
    std::vector<NodeId> remap;
    std::vector<NodeId> dense(labels.size());
    std::vector<NodeId> seen;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const NodeId raw = labels[v];
        if (raw >= remap.size()) remap.resize(raw + 1, kInvalidNode);
        if (remap[raw] == kInvalidNode) {
            remap[raw] = static_cast<NodeId>(seen.size());
            seen.push_back(raw);
        }
        dense[v] = remap[raw];
    }
    return Partition(std::move(dense), static_cast<NodeId>(seen.size()));
}

Partition Partition::singletons(NodeId n) {
    std::vector<NodeId> labels(n);
    std::iota(labels.begin(), labels.end(), NodeId{0});
    return Partition(std::move(labels), n);
}

std::vector<std::vector<NodeId>> Partition::block_members() const {
    std::vector<std::vector<NodeId>> members(block_count_);
    for (NodeId b = 0; b < block_count_; ++b) members[b].reserve(block_sizes_[b]);
    for (NodeId v = 0; v < node_count(); ++v) members[block_of_[v]].push_back(v);
    return members;
}

std::vector<std::uint64_t> internal_edge_counts(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    std::vector<std::uint64_t> internal(p.block_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w && p.block_of(v) == p.block_of(w)) ++internal[p.block_of(v)];
    return internal;
}

std::uint64_t cross_block_edges(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    std::uint64_t cut = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w && p.block_of(v) != p.block_of(w)) ++cut;
    return cut;
}

}  // namespace lf
