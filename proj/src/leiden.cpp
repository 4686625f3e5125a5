#include "lf/leiden.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lf/rng.hpp"

namespace lf {
namespace {

// One level of the hierarchy: weighted graph whose node v stands for size[v]
// original nodes. self_loop[v] counts edges internal to the aggregate;
// strength[v] = incident edge weight + 2*self_loop (the K contribution).
struct Level {
    NodeId n = 0;
    std::vector<std::uint64_t> off;
    std::vector<NodeId> nbr;
    std::vector<std::uint64_t> w;
    std::vector<std::uint64_t> self_loop;
    std::vector<std::uint64_t> strength;
    std::vector<std::uint64_t> size;
};

Level level_from_graph(const Graph& g) {
    Level lvl;
    lvl.n = g.node_count();
    lvl.off.assign(lvl.n + 1, 0);
    lvl.nbr.reserve(2 * g.edge_count());
    for (NodeId v = 0; v < lvl.n; ++v) {
        lvl.off[v + 1] = lvl.off[v] + g.degree(v);
        for (NodeId u : g.neighbors(v)) lvl.nbr.push_back(u);
    }
    lvl.w.assign(lvl.nbr.size(), 1);
    lvl.self_loop.assign(lvl.n, 0);
    lvl.strength.assign(lvl.n, 0);
    lvl.size.assign(lvl.n, 1);
    for (NodeId v = 0; v < lvl.n; ++v) lvl.strength[v] = lvl.off[v + 1] - lvl.off[v];
    return lvl;
}

// Community bookkeeping during local moving. Ids may have gaps once
// communities empty out; empty ids are recycled for detached singletons.
struct CommunityState {
    std::vector<NodeId> label;              // per level node
    std::vector<std::uint64_t> strength;    // per community id
    std::vector<std::uint64_t> size;        // per community id, node counts
    std::vector<NodeId> free_ids;           // empty ids available for reuse

    void init(const Level& lvl, const std::vector<NodeId>& initial) {
        label = initial;
        const NodeId cap = 1 + *std::max_element(label.begin(), label.end());
        strength.assign(cap, 0);
        size.assign(cap, 0);
        free_ids.clear();
        for (NodeId v = 0; v < lvl.n; ++v) {
            strength[label[v]] += lvl.strength[v];
            size[label[v]] += lvl.size[v];
        }
        for (NodeId c = cap; c-- > 0;)
            if (size[c] == 0) free_ids.push_back(c);
    }

    NodeId take_fresh_id() {
        if (!free_ids.empty()) {
            const NodeId id = free_ids.back();
            free_ids.pop_back();
            return id;
        }
        strength.push_back(0);
        size.push_back(0);
        return static_cast<NodeId>(strength.size() - 1);
    }
};

// Gain of moving a node of strength k_v from community a to b, with w_va /
// w_vb the edge weight from v into each (v excluded), K_a including v and
// K_b excluding it. Derived by differencing Q = sum_c [e_c/m - g(K_c/2m)^2].
double gain_formula(double m, double gamma, double k_v, double w_va, double w_vb, double strength_a,
                    double strength_b) {
    return (w_vb - w_va) / m + gamma * k_v * (strength_a - strength_b - k_v) / (2.0 * m * m);
}

struct MoveScratch {
    std::vector<double> weight_to;  // indexed by community id
    std::vector<NodeId> touched;
};

// One full pass over `order`. Each node moves to the admissible target with
// the largest positive gain; candidates are the neighboring communities plus
// a fresh singleton. A target is admissible if the merged size stays within
// the cap. Equal gains prefer the lowest community id; the fresh-singleton
// candidate only wins on strictly larger gain. Returns the total gain.
double local_move_pass(const Level& lvl, CommunityState& cs, const std::vector<NodeId>& order,
                       double m, double gamma, std::uint64_t cap, MoveScratch& scratch,
                       std::uint64_t& moves) {
    double total_gain = 0.0;
    auto& weight_to = scratch.weight_to;
    auto& touched = scratch.touched;
    if (weight_to.size() < cs.strength.size()) weight_to.resize(cs.strength.size(), 0.0);

    for (NodeId v : order) {
        const NodeId a = cs.label[v];
        touched.clear();
        for (std::uint64_t i = lvl.off[v]; i < lvl.off[v + 1]; ++i) {
            const NodeId c = cs.label[lvl.nbr[i]];
            if (weight_to[c] == 0.0) touched.push_back(c);
            weight_to[c] += static_cast<double>(lvl.w[i]);
        }
        const double w_va = weight_to[a];  // 0 if no neighbor shares a
        const double k_v = static_cast<double>(lvl.strength[v]);
        const double strength_a = static_cast<double>(cs.strength[a]);

        double best_gain = 0.0;
        NodeId best = a;
        for (NodeId c : touched) {
            if (c == a) continue;
            if (cs.size[c] + lvl.size[v] > cap) continue;
            const double gain = gain_formula(m, gamma, k_v, w_va, weight_to[c], strength_a,
                                             static_cast<double>(cs.strength[c]));
            if (gain > best_gain || (gain == best_gain && best != a && c < best)) {
                best_gain = gain;
                best = c;
            }
        }

        // Detaching into a fresh singleton; skipped if v is already alone.
        bool detach = false;
        if (cs.size[a] > lvl.size[v]) {
            const double gain = gain_formula(m, gamma, k_v, w_va, 0.0, strength_a, 0.0);
            if (gain > best_gain) {
                best_gain = gain;
                detach = true;
            }
        }

        for (NodeId c : touched) weight_to[c] = 0.0;
        if (!detach && best == a) continue;

        NodeId target = best;
        if (detach) {
            target = cs.take_fresh_id();
            if (weight_to.size() < cs.strength.size()) weight_to.resize(cs.strength.size(), 0.0);
        }
        cs.strength[a] -= lvl.strength[v];
        cs.size[a] -= lvl.size[v];
        cs.strength[target] += lvl.strength[v];
        cs.size[target] += lvl.size[v];
        cs.label[v] = target;
        if (cs.size[a] == 0) cs.free_ids.push_back(a);
        total_gain += best_gain;
        ++moves;
    }
    return total_gain;
}

std::uint64_t local_move(const Level& lvl, CommunityState& cs, double m, double gamma,
                         std::uint64_t cap, const LeidenConfig& cfg, std::mt19937& rng) {
    MoveScratch scratch;
    std::vector<NodeId> order(lvl.n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::uint64_t moves = 0;
    for (std::uint32_t pass = 0; pass < cfg.max_passes; ++pass) {
        deterministic_shuffle(order, rng);
        const double gain = local_move_pass(lvl, cs, order, m, gamma, cap, scratch, moves);
        if (gain < cfg.min_gain) break;
    }
    return moves;
}

// Refinement: inside each phase-1 community, restart from singletons and
// greedily merge along edges, keeping every refined community connected and
// within the cap. Only nodes still alone in their refined community move.
// Writes dense refined labels; phase1_of_refined[r] gives the phase-1
// community shared by all of r's members.
NodeId refine(const Level& lvl, const std::vector<NodeId>& phase1, double m, double gamma,
              std::uint64_t cap, std::mt19937& rng, std::vector<NodeId>& refined,
              std::vector<NodeId>& phase1_of_refined) {
    std::vector<NodeId> ref_label(lvl.n);
    std::iota(ref_label.begin(), ref_label.end(), NodeId{0});
    std::vector<std::uint64_t> ref_strength = lvl.strength;
    std::vector<std::uint64_t> ref_size = lvl.size;
    std::vector<NodeId> ref_nodes(lvl.n, 1);  // member count per refined community

    std::vector<NodeId> order(lvl.n);
    std::iota(order.begin(), order.end(), NodeId{0});
    deterministic_shuffle(order, rng);

    std::vector<double> weight_to(lvl.n, 0.0);
    std::vector<NodeId> touched;
    for (NodeId v : order) {
        const NodeId a = ref_label[v];
        if (ref_nodes[a] != 1) continue;  // only singleton communities move
        touched.clear();
        for (std::uint64_t i = lvl.off[v]; i < lvl.off[v + 1]; ++i) {
            const NodeId u = lvl.nbr[i];
            if (phase1[u] != phase1[v]) continue;
            const NodeId c = ref_label[u];
            if (c == a) continue;
            if (weight_to[c] == 0.0) touched.push_back(c);
            weight_to[c] += static_cast<double>(lvl.w[i]);
        }
        const double k_v = static_cast<double>(lvl.strength[v]);
        double best_gain = 0.0;
        NodeId best = a;
        for (NodeId c : touched) {
            if (ref_size[c] + lvl.size[v] > cap) continue;
            const double gain = gain_formula(m, gamma, k_v, 0.0, weight_to[c], k_v,
                                             static_cast<double>(ref_strength[c]));
            if (gain > best_gain || (gain == best_gain && best != a && c < best)) {
                best_gain = gain;
                best = c;
            }
        }
        for (NodeId c : touched) weight_to[c] = 0.0;
        if (best == a) continue;
        ref_label[v] = best;
        ref_strength[best] += lvl.strength[v];
        ref_size[best] += lvl.size[v];
        ref_nodes[best] += 1;
        ref_nodes[a] = 0;
    }

    // Densify refined ids in ascending old-id order.
    std::vector<NodeId> remap(lvl.n, kInvalidNode);
    NodeId next = 0;
    for (NodeId c = 0; c < lvl.n; ++c)
        if (ref_nodes[c] > 0) remap[c] = next++;
    refined.resize(lvl.n);
    phase1_of_refined.assign(next, 0);
    for (NodeId v = 0; v < lvl.n; ++v) {
        refined[v] = remap[ref_label[v]];
        phase1_of_refined[refined[v]] = phase1[v];
    }
    return next;
}

Level aggregate(const Level& lvl, const std::vector<NodeId>& refined, NodeId count) {
    Level agg;
    agg.n = count;
    agg.self_loop.assign(count, 0);
    agg.size.assign(count, 0);
    for (NodeId v = 0; v < lvl.n; ++v) {
        agg.size[refined[v]] += lvl.size[v];
        agg.self_loop[refined[v]] += lvl.self_loop[v];
    }

    struct Triple {
        NodeId a, b;
        std::uint64_t w;
        bool operator<(const Triple& o) const { return a != o.a ? a < o.a : b < o.b; }
    };
    std::vector<Triple> edges;
    for (NodeId v = 0; v < lvl.n; ++v) {
        for (std::uint64_t i = lvl.off[v]; i < lvl.off[v + 1]; ++i) {
            const NodeId u = lvl.nbr[i];
            if (u < v) continue;  // each level edge once
            const NodeId a = refined[v], b = refined[u];
            if (a == b)
                agg.self_loop[a] += lvl.w[i];
            else
                edges.push_back({std::min(a, b), std::max(a, b), lvl.w[i]});
        }
    }
    std::sort(edges.begin(), edges.end());

    std::vector<std::uint64_t> deg(count, 0);
    std::vector<Triple> merged;
    merged.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        std::uint64_t w = 0;
        while (j < edges.size() && edges[j].a == edges[i].a && edges[j].b == edges[i].b)
            w += edges[j++].w;
        merged.push_back({edges[i].a, edges[i].b, w});
        ++deg[edges[i].a];
        ++deg[edges[i].b];
        i = j;
    }

    agg.off.assign(count + 1, 0);
    for (NodeId v = 0; v < count; ++v) agg.off[v + 1] = agg.off[v] + deg[v];
    agg.nbr.resize(agg.off[count]);
    agg.w.resize(agg.off[count]);
    std::vector<std::uint64_t> cursor(agg.off.begin(), agg.off.end() - 1);
    for (const Triple& e : merged) {
        agg.nbr[cursor[e.a]] = e.b;
        agg.w[cursor[e.a]++] = e.w;
        agg.nbr[cursor[e.b]] = e.a;
        agg.w[cursor[e.b]++] = e.w;
    }
    agg.strength.assign(count, 0);
    for (NodeId v = 0; v < count; ++v) {
        std::uint64_t s = 2 * agg.self_loop[v];
        for (std::uint64_t i = agg.off[v]; i < agg.off[v + 1]; ++i) s += agg.w[i];
        agg.strength[v] = s;
    }
    return agg;
}

// Splits every disconnected community into its connected components (a
// strict modularity gain). Returns the number of extra communities created.
NodeId split_disconnected(const Level& lvl, std::vector<NodeId>& label) {
    const NodeId cap = 1 + *std::max_element(label.begin(), label.end());
    std::vector<std::vector<NodeId>> members(cap);
    for (NodeId v = 0; v < lvl.n; ++v) members[label[v]].push_back(v);

    NodeId next = cap;
    NodeId splits = 0;
    std::vector<NodeId> piece(lvl.n, kInvalidNode);
    std::vector<NodeId> stack;
    for (NodeId c = 0; c < cap; ++c) {
        bool first = true;
        for (NodeId root : members[c]) {
            if (piece[root] != kInvalidNode) continue;
            const NodeId id = first ? c : next++;
            if (!first) ++splits;
            first = false;
            piece[root] = id;
            stack.push_back(root);
            while (!stack.empty()) {
                const NodeId v = stack.back();
                stack.pop_back();
                label[v] = id;
                for (std::uint64_t i = lvl.off[v]; i < lvl.off[v + 1]; ++i) {
                    const NodeId u = lvl.nbr[i];
                    if (label[u] == c && piece[u] == kInvalidNode) {
                        piece[u] = id;
                        stack.push_back(u);
                    }
                }
            }
        }
    }
    return splits;
}

}  // namespace

double modularity(const Graph& g, const Partition& p, double resolution) {
    if (g.edge_count() == 0) fail(Errc::invalid_argument, "modularity: empty graph");
    if (p.node_count() != g.node_count())
        fail(Errc::invalid_argument, "partition does not cover the graph");

    std::vector<std::uint64_t> internal(p.block_count(), 0);
    std::vector<std::uint64_t> degree_sum(p.block_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        degree_sum[p.block_of(v)] += g.degree(v);
        for (NodeId w : g.neighbors(v))
            if (v < w && p.block_of(v) == p.block_of(w)) ++internal[p.block_of(v)];
    }
    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (NodeId c = 0; c < p.block_count(); ++c) {
        const double k = static_cast<double>(degree_sum[c]) / (2.0 * m);
        q += static_cast<double>(internal[c]) / m - resolution * k * k;
    }
    return q;
}

double move_gain(const Graph& g, const Partition& p, NodeId v, NodeId target, double resolution) {
    if (v >= g.node_count()) fail(Errc::invalid_argument, "move_gain: node out of range");
    if (target > p.block_count())
        fail(Errc::invalid_argument, "move_gain: target is neither an existing nor a fresh block");
    if (g.edge_count() == 0) fail(Errc::invalid_argument, "move_gain: empty graph");

    const NodeId a = p.block_of(v);
    if (target == a) return 0.0;

    double to_current = 0.0, to_target = 0.0;
    for (NodeId w : g.neighbors(v)) {
        if (p.block_of(w) == a) to_current += 1.0;
        else if (target < p.block_count() && p.block_of(w) == target) to_target += 1.0;
    }
    double strength_a = 0.0, strength_b = 0.0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (p.block_of(u) == a) strength_a += g.degree(u);
        else if (target < p.block_count() && p.block_of(u) == target) strength_b += g.degree(u);
    }
    const double m = static_cast<double>(g.edge_count());
    return gain_formula(m, resolution, g.degree(v), to_current, to_target, strength_a, strength_b);
}

Partition leiden_communities(const Graph& g, const LeidenConfig& cfg) {
    if (cfg.max_community_size < 1) fail(Errc::invalid_argument, "leiden: size cap must be >= 1");
    if (!(cfg.resolution > 0.0)) fail(Errc::invalid_argument, "leiden: resolution must be > 0");
    if (cfg.max_passes < 1) fail(Errc::invalid_argument, "leiden: max_passes must be >= 1");
    if (!is_connected(g))
        fail(Errc::disconnected_input, "leiden: input graph is not connected");

    const NodeId n = g.node_count();
    if (n == 0) return Partition();
    if (g.edge_count() == 0) return Partition::singletons(n);  // single node

    const double m = static_cast<double>(g.edge_count());
    const double gamma = cfg.resolution;
    const std::uint64_t cap = cfg.max_community_size;
    std::mt19937 rng(cfg.seed);

    Level lvl = level_from_graph(g);
    std::vector<NodeId> orig_to_cur(n);
    std::iota(orig_to_cur.begin(), orig_to_cur.end(), NodeId{0});
    std::vector<NodeId> initial(n);
    std::iota(initial.begin(), initial.end(), NodeId{0});
    std::vector<NodeId> result = initial;

    CommunityState cs;
    for (int round = 0; round < 64; ++round) {
        cs.init(lvl, initial);
        const std::uint64_t moves = local_move(lvl, cs, m, gamma, cap, cfg, rng);
        for (NodeId v = 0; v < n; ++v) result[v] = cs.label[orig_to_cur[v]];
        if (moves == 0) break;

        std::vector<NodeId> refined, phase1_of_refined;
        const NodeId count = refine(lvl, cs.label, m, gamma, cap, rng, refined, phase1_of_refined);
        if (count == lvl.n) break;

        lvl = aggregate(lvl, refined, count);
        for (NodeId v = 0; v < n; ++v) orig_to_cur[v] = refined[orig_to_cur[v]];
        initial = Partition::from_labels(phase1_of_refined).labels();
    }

    // Polish on the original graph: alternate capped local moves with
    // component splits until both are quiescent. Splits strictly increase Q,
    // so this terminates; the loop only exits once every block is connected
    // and no admissible single-node move improves Q.
    Level base = level_from_graph(g);
    for (int round = 0; round < 1000; ++round) {
        result = Partition::from_labels(result).labels();
        cs.init(base, result);
        const std::uint64_t moves = local_move(base, cs, m, gamma, cap, cfg, rng);
        result = cs.label;
        const NodeId splits = split_disconnected(base, result);
        if (moves == 0 && splits == 0) break;
    }
    split_disconnected(base, result);

    return Partition::from_labels(result);
}

}  // namespace lf
