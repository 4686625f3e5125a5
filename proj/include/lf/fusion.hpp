#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lf/graph.hpp"
#include "lf/partition.hpp"

namespace lf {

struct FusionConfig {
    NodeId k = 2;         // target partition count
    double alpha = 0.05;  // balance slack on max_part_size
    double beta = 0.5;    // Leiden cap ratio: S = ceil(beta * max_part_size)
    std::uint32_t seed = 42;
};

struct FusionStats {
    std::uint64_t merges = 0;
    std::uint64_t fallback_merges = 0;  // merges taken past max_part_size
};

// Node-count cap per partition, ceil((n/k) * (1 + alpha)). Values that are
// integral up to floating-point noise round instead of ceiling up.
std::uint64_t max_part_size(NodeId n, NodeId k, double alpha);

// Mutable fusion bookkeeping: community sizes, pairwise inter-community edge
// counts, and a lazy (size, id) priority queue for smallest-community
// retrieval. Pairwise counts always equal cut_edges() between the two
// communities' current node sets.
class CutState {
public:
    CutState(const Graph& g, const Partition& p);

    NodeId community_capacity() const { return static_cast<NodeId>(sizes_.size()); }
    NodeId active_count() const { return active_count_; }
    bool is_active(NodeId c) const { return c < active_.size() && active_[c]; }
    std::uint64_t size(NodeId c) const;
    std::uint64_t cut(NodeId a, NodeId b) const;  // 0 when not adjacent
    std::vector<NodeId> active_ids() const;       // ascending

    // Smallest active community by (size, id); prunes stale queue entries.
    NodeId smallest_active();

    // Merges the larger id into the smaller; returns the surviving id.
    NodeId merge(NodeId a, NodeId b);

private:
    void check_active(NodeId c) const;

    std::vector<std::uint64_t> sizes_;
    std::vector<std::map<NodeId, std::uint64_t>> cuts_;  // sorted neighbor maps
    std::vector<bool> active_;
    NodeId active_count_ = 0;
    std::vector<std::pair<std::uint64_t, NodeId>> heap_;  // min-heap on (size, id)
};

// Active communities adjacent to c (at least one crossing edge), ascending.
std::vector<NodeId> neighbors(const CutState& state, NodeId c);

// The neighbor to merge v with: among neighbors that keep the merged size
// strictly below the cap, the one with the largest cut to v; if none fits,
// the smallest neighbor. Ties break toward the lowest community id.
NodeId largest_edge_cut_neighbor(const CutState& state, NodeId v, std::uint64_t max_part_size);

// Iteratively merges the smallest community into its chosen neighbor until
// exactly cfg.k communities remain. Every block of `initial` must be
// connected and non-empty; the result keeps every block connected with no
// isolated nodes. Surviving community ids are re-densified in ascending
// order, so an input that already has k blocks is returned unchanged.
Partition fuse(const Graph& g, const Partition& initial, const FusionConfig& cfg,
               FusionStats* stats = nullptr);

// Refines a partition so that every block is one connected component of an
// original block. Empty blocks vanish. New block ids follow (original block,
// smallest contained node) order.
Partition split_into_components(const Graph& g, const Partition& p);

// The end-to-end pipeline: size-capped Leiden communities followed by fusion
// down to cfg.k blocks. Errors if Leiden yields fewer than k communities.
Partition lf_partition(const Graph& g, const FusionConfig& cfg, double resolution = 1.0,
                       FusionStats* stats = nullptr);

}  // namespace lf
