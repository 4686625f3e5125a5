#include "lf/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lf/parallel.hpp"

namespace lf {

double edge_cut_fraction(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0) fail(Errc::invalid_argument, "edge_cut_fraction: empty graph");
    return static_cast<double>(cross_block_edges(g, p)) / static_cast<double>(g.edge_count());
}

std::vector<NodeId> component_counts(const Graph& g, const Partition& p) {
    const auto members = p.block_members();
    std::vector<NodeId> counts(p.block_count(), 0);
    parallel_for_index(p.block_count(), [&](std::size_t b) {
        if (members[b].empty()) return;
        const Graph sub = induced_subgraph(g, NodeSet(members[b]));
        counts[b] = connected_components(sub).component_count;
    });
    return counts;
}

std::vector<std::uint64_t> isolated_node_counts(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    std::vector<std::uint64_t> counts(p.block_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const NodeId b = p.block_of(v);
        bool has_in_block_neighbor = false;
        for (NodeId w : g.neighbors(v)) {
            if (p.block_of(w) == b) {
                has_in_block_neighbor = true;
                break;
            }
        }
        if (!has_in_block_neighbor) ++counts[b];
    }
    return counts;
}

double node_balance(const Partition& p, NodeId k) {
    if (k == 0) fail(Errc::invalid_argument, "node_balance: k must be >= 1");
    if (k != p.block_count()) fail(Errc::invalid_argument, "node_balance: k != block count");
    const std::uint64_t largest =
        *std::max_element(p.block_sizes().begin(), p.block_sizes().end());
    return static_cast<double>(largest) * k / static_cast<double>(p.node_count());
}

double edge_balance(const Graph& g, const Partition& p, NodeId k) {
    if (k == 0) fail(Errc::invalid_argument, "edge_balance: k must be >= 1");
    if (k != p.block_count()) fail(Errc::invalid_argument, "edge_balance: k != block count");
    if (g.edge_count() == 0) fail(Errc::invalid_argument, "edge_balance: empty graph");
    const auto internal = internal_edge_counts(g, p);
    const std::uint64_t largest = *std::max_element(internal.begin(), internal.end());
    return static_cast<double>(largest) * k / static_cast<double>(g.edge_count());
}

double replication_factor(const SubgraphBundle& bundle) {
    std::uint64_t materialized = 0;
    for (const PartitionSubgraph& part : bundle.parts) materialized += part.graph.node_count();
    return static_cast<double>(materialized) / static_cast<double>(bundle.global_node_count);
}

MetricsReport metrics_report(const Graph& g, const Partition& p, const SubgraphBundle* bundle) {
    MetricsReport report;
    report.n = g.node_count();
    report.m = g.edge_count();
    report.k = p.block_count();
    report.tau = edge_cut_fraction(g, p);
    report.components = component_counts(g, p);
    report.isolated = isolated_node_counts(g, p);
    report.rho_nodes = node_balance(p, p.block_count());
    report.rho_edges = edge_balance(g, p, p.block_count());
    if (bundle) report.replication_factor = replication_factor(*bundle);
    return report;
}

namespace {

std::string format_decimal(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

}  // namespace

std::string to_text(const MetricsReport& report) {
    std::ostringstream out;
    out << "tau " << format_decimal(report.tau) << '\n';
    for (std::size_t i = 0; i < report.components.size(); ++i)
        out << "components[" << i << "] " << report.components[i] << '\n';
    for (std::size_t i = 0; i < report.isolated.size(); ++i)
        out << "isolated[" << i << "] " << report.isolated[i] << '\n';
    out << "rho_nodes " << format_decimal(report.rho_nodes) << '\n';
    out << "rho_edges " << format_decimal(report.rho_edges) << '\n';
    if (report.replication_factor)
        out << "replication_factor " << format_decimal(*report.replication_factor) << '\n';
    out << "n " << report.n << '\n';
    out << "m " << report.m << '\n';
    out << "k " << report.k << '\n';
    return out.str();
}

}  // namespace lf
