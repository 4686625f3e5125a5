#include "lf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>

namespace lf {

Graph Graph::from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) fail(Errc::invalid_argument, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adj_.resize(2 * edges.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (NodeId v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));

    g.external_ids_.resize(n);
    for (NodeId v = 0; v < n; ++v) g.external_ids_[v] = v;
    return g;
}

void Graph::set_external_ids(std::vector<std::uint64_t> ids) {
    if (ids.size() != n_) fail(Errc::invalid_argument, "external id vector size mismatch");
    external_ids_ = std::move(ids);
}

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

struct ParsedLine {
    std::uint64_t u = 0, v = 0;
    bool is_edge = false;
};

ParsedLine parse_edge_line(const std::string& line, std::uint64_t line_no) {
    ParsedLine out;
    const char* p = line.c_str();
    while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
    if (*p == '\0' || *p == '#') return out;  // blank or comment

    auto parse_id = [&](std::uint64_t& dst) {
        if (!std::isdigit(static_cast<unsigned char>(*p)))
            fail(Errc::parse, "malformed edge line " + std::to_string(line_no));
        errno = 0;
        char* end = nullptr;
        dst = std::strtoull(p, &end, 10);
        if (errno == ERANGE) fail(Errc::parse, "node id overflow on line " + std::to_string(line_no));
        p = end;
    };

    parse_id(out.u);
    while (*p == ' ' || *p == '\t') ++p;
    parse_id(out.v);
    while (*p == ' ' || *p == '\t') ++p;
    if (*p != '\0' && *p != '\r') {
        // optional weight column, parsed then ignored
        errno = 0;
        char* end = nullptr;
        (void)std::strtod(p, &end);
        if (end == p || errno == ERANGE)
            fail(Errc::parse, "malformed edge line " + std::to_string(line_no));
        p = end;
        while (*p == ' ' || *p == '\t' || *p == '\r') ++p;
        if (*p != '\0') fail(Errc::parse, "malformed edge line " + std::to_string(line_no));
    }
    out.is_edge = true;
    return out;
}

}  // namespace

LoadResult load_edge_list(std::istream& source, const EdgeListOptions& options) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;  // ordered pairs, external ids
    std::vector<std::uint64_t> seen_ids;
    LoadResult result;

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        const ParsedLine e = parse_edge_line(line, line_no);
        if (!e.is_edge) continue;
        seen_ids.push_back(e.u);
        seen_ids.push_back(e.v);
        if (e.u == e.v) {
            if (!options.skip_self_loops)
                fail(Errc::parse, "self-loop on line " + std::to_string(line_no));
            ++result.dropped_self_loops;
            continue;
        }
        raw.emplace_back(e.u, e.v);
    }

    if (seen_ids.empty()) fail(Errc::parse, "empty graph: no edges in input");

    std::sort(seen_ids.begin(), seen_ids.end());
    seen_ids.erase(std::unique(seen_ids.begin(), seen_ids.end()), seen_ids.end());
    if (seen_ids.size() > std::numeric_limits<NodeId>::max())
        fail(Errc::parse, "node id overflow: too many distinct nodes");

    auto to_internal = [&](std::uint64_t ext) {
        return static_cast<NodeId>(
            std::lower_bound(seen_ids.begin(), seen_ids.end(), ext) - seen_ids.begin());
    };

    const NodeId n = static_cast<NodeId>(seen_ids.size());
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());

    if (options.symmetrize) {
        for (const auto& [eu, ev] : raw) {
            NodeId u = to_internal(eu), v = to_internal(ev);
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        std::sort(edges.begin(), edges.end());
        const auto unique_end = std::unique(edges.begin(), edges.end());
        result.dropped_duplicates = static_cast<std::uint64_t>(edges.end() - unique_end);
        edges.erase(unique_end, edges.end());
    } else {
        // Both orientations must be present; extra occurrences are duplicates.
        std::vector<std::pair<NodeId, NodeId>> ordered;
        ordered.reserve(raw.size());
        for (const auto& [eu, ev] : raw) ordered.emplace_back(to_internal(eu), to_internal(ev));
        std::sort(ordered.begin(), ordered.end());
        for (std::size_t i = 0; i < ordered.size();) {
            std::size_t j = i;
            while (j < ordered.size() && ordered[j] == ordered[i]) ++j;
            const auto [u, v] = ordered[i];
            result.dropped_duplicates += (j - i) - 1;
            if (u < v) {
                if (!std::binary_search(ordered.begin(), ordered.end(), std::make_pair(v, u)))
                    fail(Errc::parse, "asymmetric input: edge " + std::to_string(seen_ids[u]) +
                                          " -> " + std::to_string(seen_ids[v]) +
                                          " has no reverse line");
                edges.emplace_back(u, v);
            }
            i = j;
        }
    }

    result.graph = Graph::from_edges(n, std::move(edges));
    result.graph.set_external_ids(std::move(seen_ids));
    return result;
}

Graph induced_subgraph(const Graph& g, const NodeSet& nodes) {
    const auto members = nodes.members();
    std::vector<NodeId> local(g.node_count(), kInvalidNode);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] >= g.node_count()) fail(Errc::invalid_argument, "node id out of range");
        local[members[i]] = static_cast<NodeId>(i);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (NodeId w : g.neighbors(members[i])) {
            if (w > members[i] && local[w] != kInvalidNode)
                edges.emplace_back(static_cast<NodeId>(i), local[w]);
        }
    }

    Graph sub = Graph::from_edges(static_cast<NodeId>(members.size()), std::move(edges));
    std::vector<std::uint64_t> ext(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) ext[i] = g.external_id(members[i]);
    sub.set_external_ids(std::move(ext));
    return sub;
}

ComponentLabeling connected_components(const Graph& g) {
    ComponentLabeling out;
    out.component_of.assign(g.node_count(), kInvalidNode);
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < g.node_count(); ++root) {
        if (out.component_of[root] != kInvalidNode) continue;
        const NodeId id = out.component_count++;
        out.component_of[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(v)) {
                if (out.component_of[w] == kInvalidNode) {
                    out.component_of[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

std::uint64_t cut_edges(const Graph& g, const NodeSet& a, const NodeSet& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (NodeId v : small.members())
        if (large.contains(v)) fail(Errc::invalid_argument, "cut_edges: overlapping sets");

    std::uint64_t count = 0;
    for (NodeId v : small.members()) {
        if (v >= g.node_count()) fail(Errc::invalid_argument, "node id out of range");
        for (NodeId w : g.neighbors(v))
            if (large.contains(w)) ++count;
    }
    return count;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v))
            if (v < w) out << v << ' ' << w << '\n';
}

}  // namespace lf
