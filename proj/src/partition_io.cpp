#include "lf/partition_io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace lf {

Partition read_partition_file(std::istream& in, const Graph& g) {
    // external id -> internal, via the graph's sorted external id list
    const auto& ext = g.external_ids();

    std::vector<NodeId> raw_label(g.node_count(), kInvalidNode);
    std::vector<std::uint64_t> block_ids;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* p = line.c_str();
        while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
        if (*p == '\0' || *p == '#') continue;

        auto parse_u64 = [&](std::uint64_t& dst) {
            if (!std::isdigit(static_cast<unsigned char>(*p)))
                fail(Errc::parse, "malformed partition line " + std::to_string(line_no));
            errno = 0;
            char* end = nullptr;
            dst = std::strtoull(p, &end, 10);
            if (errno == ERANGE)
                fail(Errc::parse, "id overflow on line " + std::to_string(line_no));
            p = end;
        };
        std::uint64_t node = 0, block = 0;
        parse_u64(node);
        while (*p == ' ' || *p == '\t') ++p;
        parse_u64(block);
        while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
        if (*p != '\0') fail(Errc::parse, "malformed partition line " + std::to_string(line_no));

        const auto it = std::lower_bound(ext.begin(), ext.end(), node);
        if (it == ext.end() || *it != node)
            fail(Errc::partition_coverage,
                 "partition file names unknown node " + std::to_string(node));
        const NodeId internal = static_cast<NodeId>(it - ext.begin());
        if (raw_label[internal] != kInvalidNode)
            fail(Errc::partition_coverage,
                 "node " + std::to_string(node) + " appears more than once");
        block_ids.push_back(block);
        raw_label[internal] = static_cast<NodeId>(block_ids.size() - 1);  // index into block_ids
    }

    for (NodeId v = 0; v < g.node_count(); ++v)
        if (raw_label[v] == kInvalidNode)
            fail(Errc::partition_coverage,
                 "partition file is missing node " + std::to_string(g.external_id(v)));

    // Densify file block ids in ascending value order.
    std::vector<std::uint64_t> distinct = block_ids;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() > std::numeric_limits<NodeId>::max())
        fail(Errc::parse, "too many distinct partition ids");

    std::vector<NodeId> labels(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::uint64_t id = block_ids[raw_label[v]];
        labels[v] = static_cast<NodeId>(
            std::lower_bound(distinct.begin(), distinct.end(), id) - distinct.begin());
    }
    return Partition(std::move(labels), static_cast<NodeId>(distinct.size()));
}

void write_partition_file(std::ostream& out, const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");
    // external ids are sorted ascending by construction
    for (NodeId v = 0; v < g.node_count(); ++v)
        out << g.external_id(v) << ' ' << p.block_of(v) << '\n';
}

Partition renumber_by_size(const Partition& p) {
    std::vector<NodeId> order(p.block_count());
    for (NodeId b = 0; b < p.block_count(); ++b) order[b] = b;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return p.block_size(a) != p.block_size(b) ? p.block_size(a) > p.block_size(b) : a < b;
    });
    std::vector<NodeId> remap(p.block_count(), kInvalidNode);
    NodeId next = 0;
    for (NodeId b : order) {
        if (p.block_size(b) == 0) continue;  // empty blocks dropped
        remap[b] = next++;
    }
    std::vector<NodeId> labels(p.node_count());
    for (NodeId v = 0; v < p.node_count(); ++v) labels[v] = remap[p.block_of(v)];
    return Partition(std::move(labels), next);
}

}  // namespace lf
