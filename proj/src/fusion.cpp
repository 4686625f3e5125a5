#include "lf/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "lf/leiden.hpp"

namespace lf {

std::uint64_t max_part_size(NodeId n, NodeId k, double alpha) {
    if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
    if (alpha < 0.0) fail(Errc::invalid_argument, "alpha must be >= 0");
    const double exact = static_cast<double>(n) / static_cast<double>(k) * (1.0 + alpha);
    const double rounded = std::round(exact);
    if (std::abs(exact - rounded) < 1e-9 * std::max(1.0, exact))
        return static_cast<std::uint64_t>(rounded);
    return static_cast<std::uint64_t>(std::ceil(exact));
}

CutState::CutState(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    const NodeId cap = p.block_count();
    sizes_.assign(cap, 0);
    cuts_.resize(cap);
    active_.assign(cap, false);
    for (NodeId v = 0; v < g.node_count(); ++v) ++sizes_[p.block_of(v)];
    for (NodeId c = 0; c < cap; ++c) {
        if (sizes_[c] > 0) {
            active_[c] = true;
            ++active_count_;
            heap_.emplace_back(sizes_[c], c);
        }
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const NodeId a = p.block_of(v);
        for (NodeId w : g.neighbors(v)) {
            if (v < w && a != p.block_of(w)) {
                ++cuts_[a][p.block_of(w)];
                ++cuts_[p.block_of(w)][a];
            }
        }
    }
    std::make_heap(heap_.begin(), heap_.end(), std::greater<>{});
}

void CutState::check_active(NodeId c) const {
    if (!is_active(c)) fail(Errc::invalid_argument, "inactive community id");
}

std::uint64_t CutState::size(NodeId c) const {
    check_active(c);
    return sizes_[c];
}

std::uint64_t CutState::cut(NodeId a, NodeId b) const {
    check_active(a);
    check_active(b);
    const auto it = cuts_[a].find(b);
    return it == cuts_[a].end() ? 0 : it->second;
}

std::vector<NodeId> CutState::active_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(active_count_);
    for (NodeId c = 0; c < active_.size(); ++c)
        if (active_[c]) ids.push_back(c);
    return ids;
}

NodeId CutState::smallest_active() {
    while (!heap_.empty()) {
        const auto [size, c] = heap_.front();
        if (active_[c] && sizes_[c] == size) return c;
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
        heap_.pop_back();  // stale entry
    }
    fail(Errc::invalid_argument, "no active communities");
}

NodeId CutState::merge(NodeId a, NodeId b) {
    check_active(a);
    check_active(b);
    if (a == b) fail(Errc::invalid_argument, "cannot merge a community with itself");
    const NodeId keep = std::min(a, b);
    const NodeId gone = std::max(a, b);

    sizes_[keep] += sizes_[gone];
    for (const auto& [other, count] : cuts_[gone]) {
        cuts_[other].erase(gone);
        if (other == keep) continue;
        cuts_[keep][other] += count;
        cuts_[other][keep] += count;
    }
    cuts_[gone].clear();
    cuts_[keep].erase(gone);
    sizes_[gone] = 0;
    active_[gone] = false;
    --active_count_;
    heap_.emplace_back(sizes_[keep], keep);
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
    return keep;
}

std::vector<NodeId> neighbors(const CutState& state, NodeId c) {
    if (!state.is_active(c)) fail(Errc::invalid_argument, "inactive community id");
    std::vector<NodeId> out;
    for (NodeId other : state.active_ids())
        if (other != c && state.cut(c, other) > 0) out.push_back(other);
    return out;
}

NodeId largest_edge_cut_neighbor(const CutState& state, NodeId v, std::uint64_t max_part_size) {
    const std::vector<NodeId> adjacent = neighbors(state, v);
    if (adjacent.empty())
        fail(Errc::disconnected_input, "community has no neighbors (disconnected input)");

    NodeId best = kInvalidNode;
    std::uint64_t best_cut = 0;
    for (NodeId c : adjacent) {  // ascending ids: first max wins ties
        if (state.size(c) + state.size(v) >= max_part_size) continue;
        const std::uint64_t cut = state.cut(v, c);
        if (best == kInvalidNode || cut > best_cut) {
            best = c;
            best_cut = cut;
        }
    }
    if (best != kInvalidNode) return best;

    // No merge fits: take the smallest neighbor to preserve balance.
    std::uint64_t best_size = 0;
    for (NodeId c : adjacent) {
        if (best == kInvalidNode || state.size(c) < best_size) {
            best = c;
            best_size = state.size(c);
        }
    }
    return best;
}

namespace {

void validate_blocks_connected(const Graph& g, const Partition& p) {
    const auto members = p.block_members();
    for (NodeId b = 0; b < p.block_count(); ++b) {
        if (members[b].empty())
            fail(Errc::invalid_argument, "fuse: block " + std::to_string(b) + " is empty");
        const Graph sub = induced_subgraph(g, NodeSet(members[b]));
        if (connected_components(sub).component_count != 1)
            fail(Errc::invalid_argument,
                 "fuse: block " + std::to_string(b) +
                     " is disconnected; run split_into_components first");
    }
}

}  // namespace

Partition fuse(const Graph& g, const Partition& initial, const FusionConfig& cfg,
               FusionStats* stats) {
    if (cfg.k < 1) fail(Errc::invalid_argument, "fuse: k must be >= 1");
    if (cfg.alpha < 0.0) fail(Errc::invalid_argument, "fuse: alpha must be >= 0");
    if (initial.block_count() < cfg.k)
        fail(Errc::invalid_argument, "fuse: initial partition has fewer blocks than k");
    if (!is_connected(g)) fail(Errc::disconnected_input, "fuse: input graph is not connected");
    validate_blocks_connected(g, initial);

    const std::uint64_t cap = max_part_size(g.node_count(), cfg.k, cfg.alpha);
    CutState state(g, initial);
    std::vector<NodeId> survivor(initial.block_count());
    std::iota(survivor.begin(), survivor.end(), NodeId{0});

    while (state.active_count() > cfg.k) {
        const NodeId smallest = state.smallest_active();
        const NodeId target = largest_edge_cut_neighbor(state, smallest, cap);
        assert(state.cut(smallest, target) > 0);
        const bool fits = state.size(smallest) + state.size(target) < cap;
        const NodeId kept = state.merge(smallest, target);
        survivor[kept == smallest ? target : smallest] = kept;
        if (stats) {
            ++stats->merges;
            if (!fits) ++stats->fallback_merges;
        }
    }

    // Resolve merge chains, then densify surviving ids in ascending order so
    // an input that already had k blocks passes through unchanged.
    for (NodeId c = 0; c < survivor.size(); ++c) {
        NodeId root = c;
        while (survivor[root] != root) root = survivor[root];
        survivor[c] = root;
    }
    std::vector<NodeId> dense(initial.block_count(), kInvalidNode);
    NodeId next = 0;
    for (NodeId c = 0; c < survivor.size(); ++c)
        if (survivor[c] == c && state.is_active(c)) dense[c] = next++;
    std::vector<NodeId> labels(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        labels[v] = dense[survivor[initial.block_of(v)]];
    return Partition(std::move(labels), next);
}

Partition split_into_components(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    std::vector<NodeId> labels(g.node_count(), kInvalidNode);
    NodeId next = 0;
    std::vector<NodeId> stack;
    const auto members = p.block_members();
    for (NodeId b = 0; b < p.block_count(); ++b) {
        for (NodeId root : members[b]) {
            if (labels[root] != kInvalidNode) continue;
            const NodeId id = next++;
            labels[root] = id;
            stack.push_back(root);
            while (!stack.empty()) {
                const NodeId v = stack.back();
                stack.pop_back();
                for (NodeId w : g.neighbors(v)) {
                    if (labels[w] == kInvalidNode && p.block_of(w) == b) {
                        labels[w] = id;
                        stack.push_back(w);
                    }
                }
            }
        }
    }
    return Partition(std::move(labels), next);
}

Partition lf_partition(const Graph& g, const FusionConfig& cfg, double resolution,
                       FusionStats* stats) {
    if (cfg.k < 1) fail(Errc::invalid_argument, "k must be >= 1");
    if (g.node_count() < cfg.k)
        fail(Errc::invalid_argument, "k exceeds the number of nodes");
    if (!(cfg.beta > 0.0 && cfg.beta <= 1.0))
        fail(Errc::invalid_argument, "beta must be in (0, 1]");
    if (!is_connected(g)) fail(Errc::disconnected_input, "input graph is not connected");

    const std::uint64_t part_cap = max_part_size(g.node_count(), cfg.k, cfg.alpha);
    const double exact = cfg.beta * static_cast<double>(part_cap);
    const double rounded = std::round(exact);
    std::uint64_t community_cap;
    if (std::abs(exact - rounded) < 1e-9 * std::max(1.0, exact))
        community_cap = static_cast<std::uint64_t>(rounded);
    else
        community_cap = static_cast<std::uint64_t>(std::ceil(exact));
    community_cap = std::max<std::uint64_t>(community_cap, 1);

    LeidenConfig leiden_cfg;
    leiden_cfg.resolution = resolution;
    leiden_cfg.max_community_size = community_cap;
    leiden_cfg.seed = cfg.seed;
    const Partition communities = leiden_communities(g, leiden_cfg);
    if (communities.block_count() < cfg.k)
        fail(Errc::too_few_communities,
             "Leiden produced " + std::to_string(communities.block_count()) +
                 " communities for k=" + std::to_string(cfg.k) + "; lower beta");

    return fuse(g, communities, cfg, stats);
}

}  // namespace lf
