#include "lf/baselines.hpp"

#include <random>
#include <vector>

#include "lf/rng.hpp"

namespace lf {

Partition lpa_partition(const Graph& g, const LpaConfig& cfg) {
    if (g.node_count() == 0) fail(Errc::invalid_argument, "lpa: empty graph");
    if (cfg.k < 1) fail(Errc::invalid_argument, "lpa: k must be >= 1");
    if (cfg.max_iters < 1) fail(Errc::invalid_argument, "lpa: max_iters must be >= 1");

    std::mt19937 rng(cfg.seed);
    std::vector<NodeId> labels(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) labels[v] = bounded_uint(rng, cfg.k);

    std::vector<NodeId> next(g.node_count());
    std::vector<std::uint32_t> count(cfg.k, 0);
    std::vector<NodeId> touched;
    for (std::uint32_t iter = 0; iter < cfg.max_iters; ++iter) {
        bool changed = false;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (g.degree(v) == 0) {
                next[v] = labels[v];
                continue;
            }
            touched.clear();
            for (NodeId w : g.neighbors(v)) {
                if (count[labels[w]] == 0) touched.push_back(labels[w]);
                ++count[labels[w]];
            }
            NodeId best = labels[v];
            std::uint32_t best_count = 0;
            for (NodeId label : touched) {
                if (count[label] > best_count ||
                    (count[label] == best_count && label < best)) {
                    best = label;
                    best_count = count[label];
                }
            }
            for (NodeId label : touched) count[label] = 0;
            next[v] = best;
            changed = changed || best != labels[v];
        }
        labels.swap(next);
        if (!changed) break;
    }
    return Partition(std::move(labels), cfg.k);
}

Partition random_partition(const Graph& g, NodeId k, std::uint32_t seed) {
    if (k < 1) fail(Errc::invalid_argument, "random_partition: k must be >= 1");
    std::mt19937 rng(seed);
    std::vector<NodeId> labels(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) labels[v] = bounded_uint(rng, k);
    return Partition(std::move(labels), k);
}

}  // namespace lf
