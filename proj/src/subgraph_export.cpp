#include "lf/subgraph_export.hpp"

#include <algorithm>
#include <fstream>

namespace lf {

SubgraphBundle export_inner(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    SubgraphBundle bundle;
    bundle.mode = ExportMode::inner;
    bundle.global_node_count = g.node_count();
    bundle.k = p.block_count();
    const auto members = p.block_members();
    for (NodeId b = 0; b < p.block_count(); ++b) {
        PartitionSubgraph part;
        part.partition_index = b;
        part.graph = induced_subgraph(g, NodeSet(members[b]));
        part.owned_count = static_cast<NodeId>(members[b].size());
        part.is_halo.assign(members[b].size(), false);
        bundle.parts.push_back(std::move(part));
    }
    return bundle;
}

SubgraphBundle export_repli(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    SubgraphBundle bundle;
    bundle.mode = ExportMode::repli;
    bundle.global_node_count = g.node_count();
    bundle.k = p.block_count();
    const auto members = p.block_members();

    std::vector<NodeId> local(g.node_count(), kInvalidNode);
    for (NodeId b = 0; b < p.block_count(); ++b) {
        // Halo set: neighbors of owned nodes that live in another block.
        std::vector<NodeId> halo;
        for (NodeId v : members[b])
            for (NodeId w : g.neighbors(v))
                if (p.block_of(w) != b) halo.push_back(w);
        std::sort(halo.begin(), halo.end());
        halo.erase(std::unique(halo.begin(), halo.end()), halo.end());

        const NodeId owned = static_cast<NodeId>(members[b].size());
        const NodeId total = owned + static_cast<NodeId>(halo.size());
        for (NodeId i = 0; i < owned; ++i) local[members[b][i]] = i;
        for (NodeId i = 0; i < halo.size(); ++i) local[halo[i]] = owned + i;

        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId v : members[b]) {
            for (NodeId w : g.neighbors(v)) {
                if (p.block_of(w) == b) {
                    if (v < w) edges.emplace_back(local[v], local[w]);
                } else {
                    edges.emplace_back(local[v], local[w]);  // owned-halo
                }
            }
        }

        PartitionSubgraph part;
        part.partition_index = b;
        part.graph = Graph::from_edges(total, std::move(edges));
        std::vector<std::uint64_t> ext(total);
        for (NodeId i = 0; i < owned; ++i) ext[i] = g.external_id(members[b][i]);
        for (NodeId i = 0; i < halo.size(); ++i) ext[owned + i] = g.external_id(halo[i]);
        part.graph.set_external_ids(std::move(ext));
        part.owned_count = owned;
        part.is_halo.assign(total, false);
        for (NodeId i = owned; i < total; ++i) part.is_halo[i] = true;
        bundle.parts.push_back(std::move(part));

        for (NodeId v : members[b]) local[v] = kInvalidNode;
        for (NodeId v : halo) local[v] = kInvalidNode;
    }
    return bundle;
}

void write_bundle(const SubgraphBundle& bundle, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (const PartitionSubgraph& part : bundle.parts) {
        const fs::path part_dir = dir / ("part" + std::to_string(part.partition_index));
        fs::create_directories(part_dir);

        std::ofstream edges(part_dir / "edges.tsv");
        write_edge_list(edges, part.graph);

        std::ofstream manifest(part_dir / "manifest.tsv");
        for (NodeId v = 0; v < part.graph.node_count(); ++v)
            manifest << v << ' ' << part.graph.external_id(v) << ' '
                     << (part.is_halo[v] ? "halo" : "owned") << '\n';

        std::ofstream meta(part_dir / "meta.tsv");
        meta << "mode " << (bundle.mode == ExportMode::inner ? "inner" : "repli") << '\n'
             << "k " << bundle.k << '\n'
             << "partition " << part.partition_index << '\n'
             << "nodes_owned " << part.owned_count << '\n'
             << "nodes_halo " << (part.graph.node_count() - part.owned_count) << '\n'
             << "edges " << part.graph.edge_count() << '\n';
    }
}

}  // namespace lf
