#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lf/fusion.hpp"
#include "lf/leiden.hpp"
#include "test_support.hpp"

using namespace lf;
using namespace lf::test;

namespace {

// Three path communities V (5 nodes), A, B plus a controllable number of
// V-A and V-B edges, for exercising neighbor selection.
struct NeighborFixture {
    Graph graph;
    Partition partition;  // block 0 = V, 1 = A, 2 = B
};

NeighborFixture make_neighbor_fixture(NodeId a_size, NodeId b_size, NodeId va_edges,
                                      NodeId vb_edges) {
    const NodeId v_size = 5;
    const NodeId n = v_size + a_size + b_size;
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto add_path = [&](NodeId base, NodeId count) {
        for (NodeId i = 1; i < count; ++i)
            edges.emplace_back(base + i - 1, base + i);
    };
    add_path(0, v_size);
    add_path(v_size, a_size);
    add_path(v_size + a_size, b_size);
    for (NodeId i = 0; i < va_edges; ++i)
        edges.emplace_back(i % v_size, v_size + i % a_size);
    for (NodeId i = 0; i < vb_edges; ++i)
        edges.emplace_back(i % v_size, v_size + a_size + i % b_size);

    std::vector<NodeId> labels(n);
    for (NodeId v = 0; v < n; ++v) labels[v] = v < v_size ? 0 : (v < v_size + a_size ? 1 : 2);
    NeighborFixture fx;
    fx.graph = Graph::from_edges(n, std::move(edges));
    fx.partition = Partition(std::move(labels), 3);
    return fx;
}

Partition triangle_ring_partition() {
    std::vector<NodeId> labels(12);
    for (NodeId v = 0; v < 12; ++v) labels[v] = v / 3;
    return Partition(std::move(labels), 4);
}

}  // namespace

TEST_CASE("max_part_size rounds exactly") {
    CHECK(max_part_size(34, 2, 0.05) == 18);   // ceil(17.85)
    CHECK(max_part_size(12, 2, 0.05) == 7);    // ceil(6.3)
    CHECK(max_part_size(40, 2, 0.05) == 21);   // 21 exactly, no spurious ceil to 22
    CHECK(max_part_size(100, 4, 0.0) == 25);   // exact division stays put
    CHECK(max_part_size(10, 3, 0.0) == 4);     // ceil(10/3)
}

TEST_CASE("CutState tracks sizes and pairwise cuts") {
    const Graph bb = barbell();
    const Partition p = Partition::from_labels(std::vector<NodeId>{0, 0, 0, 1, 1, 1});
    CutState state(bb, p);
    CHECK(state.active_count() == 2);
    CHECK(state.size(0) == 3);
    CHECK(state.size(1) == 3);
    CHECK(state.cut(0, 1) == 1);
    CHECK(state.cut(1, 0) == 1);
    CHECK(neighbors(state, 0) == std::vector<NodeId>{1});

    CHECK_THROWS_AS(state.size(5), Error);
    CHECK_THROWS_AS(neighbors(state, 7), Error);
}

TEST_CASE("neighbors on the triangle ring and on a lone community") {
    CutState ring(ring_of_four_triangles(), triangle_ring_partition());
    CHECK(neighbors(ring, 0) == std::vector<NodeId>{1, 3});
    CHECK(neighbors(ring, 1) == std::vector<NodeId>{0, 2});
    CHECK(neighbors(ring, 2) == std::vector<NodeId>{1, 3});
    CHECK(neighbors(ring, 3) == std::vector<NodeId>{0, 2});

    const Graph tri = triangle();
    CutState lone(tri, Partition::from_labels(std::vector<NodeId>{0, 0, 0}));
    CHECK(neighbors(lone, 0).empty());
}

TEST_CASE("CutState merge keeps counts equal to recomputation") {
    std::mt19937 rng(19);
    for (int i = 0; i < 8; ++i) {
        const Graph g = random_connected_graph(60, 4.0, rng);
        const Partition p = split_into_components(g, random_labels(60, 12, rng));
        CutState state(g, p);
        std::vector<NodeId> label = p.labels();  // node -> active community id

        while (state.active_count() > 1) {
            const NodeId smallest = state.smallest_active();
            const auto adjacent = neighbors(state, smallest);
            REQUIRE(!adjacent.empty());
            const NodeId other = adjacent[0];
            const NodeId kept = state.merge(smallest, other);
            const NodeId gone = kept == smallest ? other : smallest;
            std::uint64_t expected_size = 0;
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (label[v] == gone) label[v] = kept;
                if (label[v] == kept) ++expected_size;
            }

            CHECK(state.size(kept) == expected_size);
            const auto ids = state.active_ids();
            for (NodeId a : ids)
                for (NodeId b : ids)
                    if (a < b) {
                        CHECK(state.cut(a, b) == oracle_pair_cut(g, label, a, b));
                        CHECK(state.cut(a, b) == state.cut(b, a));
                    }
        }
    }
}

TEST_CASE("smallest_active breaks size ties by lowest id") {
    CutState ring(ring_of_four_triangles(), triangle_ring_partition());
    CHECK(ring.smallest_active() == 0);
    ring.merge(0, 1);  // sizes now 6,3,3 under ids 0,2,3
    CHECK(ring.smallest_active() == 2);
}

TEST_CASE("largest_edge_cut_neighbor follows the two branches") {
    SUBCASE("prefers the largest cut among fitting neighbors") {
        const NeighborFixture fx = make_neighbor_fixture(10, 12, 5, 7);
        CutState state(fx.graph, fx.partition);
        REQUIRE(state.size(0) == 5);
        REQUIRE(state.cut(0, 1) == 5);
        REQUIRE(state.cut(0, 2) == 7);
        CHECK(largest_edge_cut_neighbor(state, 0, 18) == 2);  // both fit: larger cut wins
        CHECK(largest_edge_cut_neighbor(state, 0, 16) == 1);  // only A fits
    }
    SUBCASE("falls back to the smallest neighbor when nothing fits") {
        const NeighborFixture fx = make_neighbor_fixture(20, 30, 5, 7);
        CutState state(fx.graph, fx.partition);
        CHECK(largest_edge_cut_neighbor(state, 0, 18) == 1);
    }
    SUBCASE("a single neighbor is chosen regardless of size") {
        const Graph bb = barbell();
        CutState state(bb, Partition::from_labels(std::vector<NodeId>{0, 0, 0, 1, 1, 1}));
        CHECK(largest_edge_cut_neighbor(state, 0, 4) == 1);  // fallback: 3+3 >= 4
        CHECK(largest_edge_cut_neighbor(state, 0, 100) == 1);
    }
    SUBCASE("no neighbors signals disconnected input") {
        const Graph tri = triangle();
        CutState lone(tri, Partition::from_labels(std::vector<NodeId>{0, 0, 0}));
        CHECK_THROWS_AS(largest_edge_cut_neighbor(lone, 0, 10), Error);
    }
}

TEST_CASE("fuse on the triangle ring pairs adjacent triangles") {
    const Graph ring = ring_of_four_triangles();
    const Partition initial = triangle_ring_partition();
    FusionConfig cfg;
    cfg.k = 2;
    cfg.alpha = 0.05;
    FusionStats stats;
    const Partition fused = fuse(ring, initial, cfg, &stats);

    REQUIRE(fused.block_count() == 2);
    CHECK(fused.block_size(0) == 6);
    CHECK(fused.block_size(1) == 6);
    CHECK(oracle_cut(ring, fused) == 2);
    CHECK(stats.merges == 2);
    CHECK(stats.fallback_merges == 0);
    // blocks are unions of ring-adjacent triangles
    CHECK(structurally_sound(ring, fused));
    for (NodeId t = 0; t < 4; ++t) {
        CHECK(fused.block_of(3 * t) == fused.block_of(3 * t + 1));
        CHECK(fused.block_of(3 * t) == fused.block_of(3 * t + 2));
    }

    // Brute force over the 2^4 triangle groupings: no connected 2-way
    // grouping beats a cut of 2.
    std::uint64_t best = ~0ull;
    for (unsigned mask = 1; mask < 15; ++mask) {
        std::vector<NodeId> labels(12);
        for (NodeId t = 0; t < 4; ++t)
            for (NodeId i = 0; i < 3; ++i) labels[3 * t + i] = (mask >> t) & 1u;
        Partition candidate(std::move(labels), 2);
        if (!structurally_sound(ring, candidate)) continue;
        best = std::min(best, oracle_cut(ring, candidate));
    }
    CHECK(oracle_cut(ring, fused) == best);
}

TEST_CASE("fuse returns an input that already has k blocks unchanged") {
    const Graph ring = ring_of_four_triangles();
    const Partition initial = triangle_ring_partition();
    FusionConfig cfg;
    cfg.k = 4;
    const Partition out = fuse(ring, initial, cfg);
    CHECK(out.labels() == initial.labels());
}

TEST_CASE("fuse validates its preconditions") {
    const Graph ring = ring_of_four_triangles();
    FusionConfig cfg;
    cfg.k = 5;
    CHECK_THROWS_AS(fuse(ring, triangle_ring_partition(), cfg), Error);

    cfg.k = 2;
    std::vector<NodeId> disconnected_block(12, 0);
    disconnected_block[0] = 1;
    disconnected_block[6] = 1;  // block 1 = {0, 6}, not adjacent
    CHECK_THROWS_AS(fuse(ring, Partition(std::move(disconnected_block), 2), cfg), Error);

    try {
        fuse(two_disjoint_triangles(),
             Partition::from_labels(std::vector<NodeId>{0, 0, 0, 1, 1, 1}), cfg);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::disconnected_input);
    }
}

TEST_CASE("split_into_components") {
    SUBCASE("already-connected blocks keep their structure") {
        const Graph bb = barbell();
        const Partition p = Partition::from_labels(std::vector<NodeId>{0, 0, 0, 1, 1, 1});
        const Partition split = split_into_components(bb, p);
        CHECK(split.block_count() == 2);
        CHECK(split.labels() == p.labels());
    }
    SUBCASE("a block of two disjoint triangles splits in two") {
        const Graph two = two_disjoint_triangles();
        const Partition whole(std::vector<NodeId>(6, 0), 1);
        const Partition split = split_into_components(two, whole);
        CHECK(split.block_count() == 2);
    }
    SUBCASE("block count equals the sum of per-block component counts") {
        const Graph karate = load_fixture("karate.tsv");
        std::mt19937 rng(29);
        for (int i = 0; i < 20; ++i) {
            const Partition p = random_labels(34, 2, rng);
            const auto oracle = oracle_block_components(karate, p);
            NodeId expected = 0;
            for (NodeId c : oracle) expected += c;
            CHECK(split_into_components(karate, p).block_count() == expected);
        }
    }
}

TEST_CASE("lf_partition on karate") {
    const Graph karate = load_fixture("karate.tsv");
    FusionConfig cfg;
    cfg.k = 2;
    for (std::uint32_t seed : {1u, 7u, 42u}) {
        cfg.seed = seed;
        const Partition p = lf_partition(karate, cfg);
        REQUIRE(p.block_count() == 2);
        CHECK(structurally_sound(karate, p));
    }

    cfg.k = 1;
    const Partition single = lf_partition(karate, cfg);
    CHECK(single.block_count() == 1);
    CHECK(single.block_size(0) == 34);
}

TEST_CASE("lf_partition errors when Leiden yields fewer than k communities") {
    const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    FusionConfig cfg;
    cfg.k = 3;
    cfg.beta = 1.0;  // S = 2 on K4: Leiden pairs up, 2 < 3
    try {
        lf_partition(k4, cfg);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::too_few_communities);
    }
}

TEST_CASE("lf_partition structural guarantee on random graphs") {
    std::mt19937 rng(37);
    for (int i = 0; i < 15; ++i) {
        const NodeId n = 30 + bounded_uint(rng, 200);
        const Graph g = random_connected_graph(n, 2.0 + bounded_uint(rng, 8), rng);
        FusionConfig cfg;
        cfg.k = 2 + bounded_uint(rng, 5);
        cfg.seed = 500 + i;
        FusionStats stats;
        Partition p;
        try {
            p = lf_partition(g, cfg, 1.0, &stats);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::too_few_communities);
            continue;
        }
        REQUIRE(p.block_count() == cfg.k);
        CHECK(structurally_sound(g, p));
        if (stats.fallback_merges == 0) {
            const std::uint64_t cap = max_part_size(n, cfg.k, cfg.alpha);
            for (NodeId b = 0; b < p.block_count(); ++b) CHECK(p.block_size(b) <= cap);
        }
    }
}

TEST_CASE("lf_partition is deterministic for a fixed seed") {
    const Graph karate = load_fixture("karate.tsv");
    FusionConfig cfg;
    cfg.k = 2;
    cfg.seed = 11;
    const Partition a = lf_partition(karate, cfg);
    const Partition b = lf_partition(karate, cfg);
    CHECK(a.labels() == b.labels());
}
