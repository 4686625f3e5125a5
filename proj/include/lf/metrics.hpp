#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lf/graph.hpp"
#include "lf/partition.hpp"
#include "lf/subgraph_export.hpp"

namespace lf {

// Quality metrics for one (graph, partition) pair. replication_factor is
// present only when computed from a subgraph bundle. rho_edges is reported
// as computed and can fall below 1 when many edges are cut.
struct MetricsReport {
    double tau = 0.0;                        // cut edges / m, once-counted
    std::vector<NodeId> components;          // per block (0 for empty blocks)
    std::vector<std::uint64_t> isolated;     // per block, nodes with no in-block neighbor
    double rho_nodes = 1.0;                  // max block size / (n/k)
    double rho_edges = 1.0;                  // max internal edges / (m/k)
    std::optional<double> replication_factor;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    NodeId k = 0;
};

// Fraction of edges whose endpoints lie in different blocks, each counted
// once.
double edge_cut_fraction(const Graph& g, const Partition& p);

// Connected components of each block's induced subgraph.
std::vector<NodeId> component_counts(const Graph& g, const Partition& p);

// Per block, nodes with zero neighbors inside their own block.
std::vector<std::uint64_t> isolated_node_counts(const Graph& g, const Partition& p);

double node_balance(const Partition& p, NodeId k);
double edge_balance(const Graph& g, const Partition& p, NodeId k);

// Average number of partitions materializing each node (owned + halo).
double replication_factor(const SubgraphBundle& bundle);

MetricsReport metrics_report(const Graph& g, const Partition& p,
                             const SubgraphBundle* bundle = nullptr);

// Flat key/value serialization with stable key order: tau, components[i],
// isolated[i], rho_nodes, rho_edges, replication_factor (when present), n,
// m, k.
std::string to_text(const MetricsReport& report);

}  // namespace lf
