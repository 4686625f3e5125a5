#pragma once

#include <iosfwd>

#include "lf/graph.hpp"
#include "lf/partition.hpp"

namespace lf {

// Partition file: one "global_node_id partition_id" line per node. Every
// graph node must appear exactly once. Sparse partition ids in the file are
// densified in ascending id order on read.
Partition read_partition_file(std::istream& in, const Graph& g);

// Writes lines sorted by global node id.
void write_partition_file(std::ostream& out, const Graph& g, const Partition& p);

// Renumbers block ids densely by descending block size, then ascending old
// id; empty blocks are dropped. This is the canonical id order for files.
Partition renumber_by_size(const Partition& p);

}  // namespace lf
