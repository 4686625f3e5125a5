#pragma once

#include <cstdint>

#include "lf/graph.hpp"
#include "lf/partition.hpp"

namespace lf {

struct LpaConfig {
    NodeId k = 2;
    std::uint32_t max_iters = 100;
    std::uint32_t seed = 42;
};

// Label propagation: seeded uniform initial labels in 0..k-1, then
// synchronous sweeps of label(v) <- mode of neighbor labels (ties to the
// smallest label, neighborless nodes keep theirs) until a sweep changes
// nothing or max_iters is reached. Blocks may end up empty; the result keeps
// block_count = k regardless.
Partition lpa_partition(const Graph& g, const LpaConfig& cfg);

// Each node assigned independently and uniformly over 0..k-1 (seeded).
Partition random_partition(const Graph& g, NodeId k, std::uint32_t seed);

}  // namespace lf
