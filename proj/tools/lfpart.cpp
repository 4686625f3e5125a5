// Command-line front end: partition / fuse / metrics / export pipelines over
// edge-list graphs and partition files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lf/baselines.hpp"
#include "lf/fusion.hpp"
#include "lf/graph.hpp"
#include "lf/metrics.hpp"
#include "lf/partition_io.hpp"
#include "lf/subgraph_export.hpp"

namespace {

constexpr int kExitBadFlags = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitTooFewCommunities = 4;
constexpr int kExitCoverage = 5;

int exit_code_for(const lf::Error& e) {
    switch (e.code()) {
        case lf::Errc::disconnected_input: return kExitDisconnected;
        case lf::Errc::too_few_communities: return kExitTooFewCommunities;
        case lf::Errc::partition_coverage: return kExitCoverage;
        default: return kExitBadFlags;
    }
}

lf::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) lf::fail(lf::Errc::parse, "cannot open " + path);
    const lf::LoadResult loaded = lf::load_edge_list(in);
    if (loaded.dropped_self_loops || loaded.dropped_duplicates)
        std::cerr << "note: dropped " << loaded.dropped_self_loops << " self-loops and "
                  << loaded.dropped_duplicates << " duplicate edges\n";
    return loaded.graph;
}

lf::Partition load_partition(const std::string& path, const lf::Graph& g) {
    std::ifstream in(path);
    if (!in) lf::fail(lf::Errc::parse, "cannot open " + path);
    return lf::read_partition_file(in, g);
}

void write_partition(const std::string& path, const lf::Graph& g, const lf::Partition& p) {
    std::ofstream out(path);
    if (!out) lf::fail(lf::Errc::parse, "cannot write " + path);
    lf::write_partition_file(out, g, p);
}

void emit_report(const lf::MetricsReport& report, const std::optional<std::string>& path) {
    const std::string text = lf::to_text(report);
    if (path) {
        std::ofstream out(*path);
        if (!out) lf::fail(lf::Errc::parse, "cannot write " + *path);
        out << text;
    } else {
        std::cout << text;
    }
}

struct PartitionArgs {
    std::string input, method, output;
    std::optional<std::string> metrics_path;
    lf::NodeId k = 2;
    double alpha = 0.05, beta = 0.5, gamma = 1.0;
    std::uint32_t seed = 42, max_iters = 100;
};

int run_partition(const PartitionArgs& args) {
    const lf::Graph g = load_graph(args.input);
    const auto start = std::chrono::steady_clock::now();

    lf::Partition p;
    if (args.method == "lf") {
        lf::FusionConfig cfg{args.k, args.alpha, args.beta, args.seed};
        lf::FusionStats stats;
        p = lf::lf_partition(g, cfg, args.gamma, &stats);
        if (stats.fallback_merges > 0)
            std::cerr << "note: " << stats.fallback_merges
                      << " merges exceeded max_part_size (fallback branch)\n";
    } else if (args.method == "lpa") {
        p = lf::lpa_partition(g, {args.k, args.max_iters, args.seed});
    } else {
        p = lf::random_partition(g, args.k, args.seed);
    }

    const lf::Partition dense = lf::renumber_by_size(p);
    if (dense.block_count() < p.block_count())
        std::cerr << "note: " << (p.block_count() - dense.block_count())
                  << " of " << p.block_count() << " blocks ended empty and were dropped\n";
    write_partition(args.output, g, dense);
    emit_report(lf::metrics_report(g, dense), args.metrics_path);

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cerr << "partition: " << args.method << " k=" << dense.block_count() << " in "
              << elapsed.count() << " s\n";
    return 0;
}

struct FuseArgs {
    std::string input, partitions, output;
    lf::NodeId k = 2;
    double alpha = 0.05;
};

int run_fuse(const FuseArgs& args) {
    const lf::Graph g = load_graph(args.input);
    const lf::Partition initial = load_partition(args.partitions, g);
    if (!lf::is_connected(g))
        lf::fail(lf::Errc::disconnected_input, "fuse: input graph is not connected");

    const lf::Partition split = lf::split_into_components(g, initial);
    if (split.block_count() < args.k)
        lf::fail(lf::Errc::disconnected_input,
                 "only " + std::to_string(split.block_count()) +
                     " components after splitting; need at least k=" + std::to_string(args.k));

    lf::FusionStats stats;
    const lf::Partition fused =
        lf::fuse(g, split, {args.k, args.alpha, /*beta=*/0.5, /*seed=*/0}, &stats);
    if (stats.fallback_merges > 0)
        std::cerr << "note: " << stats.fallback_merges
                  << " merges exceeded max_part_size (fallback branch)\n";
    write_partition(args.output, g, lf::renumber_by_size(fused));
    return 0;
}

struct MetricsArgs {
    std::string input, partitions;
    std::optional<std::string> mode, output;
};

int run_metrics(const MetricsArgs& args) {
    const lf::Graph g = load_graph(args.input);
    const lf::Partition p = load_partition(args.partitions, g);
    std::optional<lf::SubgraphBundle> bundle;
    if (args.mode)
        bundle = *args.mode == "inner" ? lf::export_inner(g, p) : lf::export_repli(g, p);
    emit_report(lf::metrics_report(g, p, bundle ? &*bundle : nullptr), args.output);
    return 0;
}

struct ExportArgs {
    std::string input, partitions, mode = "inner", output;
};

int run_export(const ExportArgs& args) {
    const lf::Graph g = load_graph(args.input);
    const lf::Partition p = load_partition(args.partitions, g);
    const lf::SubgraphBundle bundle =
        args.mode == "inner" ? lf::export_inner(g, p) : lf::export_repli(g, p);
    lf::write_bundle(bundle, args.output);
    std::cerr << "export: wrote " << bundle.parts.size() << " partition directories to "
              << args.output << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leiden-Fusion graph partitioning toolkit"};
    app.require_subcommand(1);

    PartitionArgs part_args;
    CLI::App* partition = app.add_subcommand("partition", "Partition a graph into k blocks");
    partition->add_option("--input", part_args.input, "edge-list file")->required();
    partition->add_option("--k", part_args.k, "number of partitions")->required();
    partition->add_option("--method", part_args.method, "lf | lpa | random")
        ->required()
        ->check(CLI::IsMember({"lf", "lpa", "random"}));
    partition->add_option("--alpha", part_args.alpha, "balance slack (lf)");
    partition->add_option("--beta", part_args.beta, "Leiden cap ratio (lf)");
    partition->add_option("--gamma", part_args.gamma, "modularity resolution (lf)");
    partition->add_option("--seed", part_args.seed, "RNG seed");
    partition->add_option("--max-iters", part_args.max_iters, "LPA sweep budget");
    partition->add_option("--output", part_args.output, "partition file to write")->required();
    partition->add_option("--metrics", part_args.metrics_path, "metrics report file");

    FuseArgs fuse_args;
    CLI::App* fuse = app.add_subcommand("fuse", "Fuse an external partition down to k blocks");
    fuse->add_option("--input", fuse_args.input, "edge-list file")->required();
    fuse->add_option("--partitions", fuse_args.partitions, "partition file")->required();
    fuse->add_option("--k", fuse_args.k, "number of partitions")->required();
    fuse->add_option("--alpha", fuse_args.alpha, "balance slack");
    fuse->add_option("--output", fuse_args.output, "partition file to write")->required();

    MetricsArgs metrics_args;
    CLI::App* metrics = app.add_subcommand("metrics", "Quality metrics for a partition");
    metrics->add_option("--input", metrics_args.input, "edge-list file")->required();
    metrics->add_option("--partitions", metrics_args.partitions, "partition file")->required();
    metrics->add_option("--mode", metrics_args.mode, "inner | repli (adds replication factor)")
        ->check(CLI::IsMember({"inner", "repli"}));
    metrics->add_option("--output", metrics_args.output, "report file (default stdout)");

    ExportArgs export_args;
    CLI::App* exporter = app.add_subcommand("export", "Write per-partition training subgraphs");
    exporter->add_option("--input", export_args.input, "edge-list file")->required();
    exporter->add_option("--partitions", export_args.partitions, "partition file")->required();
    exporter->add_option("--mode", export_args.mode, "inner | repli")
        ->required()
        ->check(CLI::IsMember({"inner", "repli"}));
    exporter->add_option("--output", export_args.output, "bundle directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (partition->parsed()) return run_partition(part_args);
        if (fuse->parsed()) return run_fuse(fuse_args);
        if (metrics->parsed()) return run_metrics(metrics_args);
        return run_export(export_args);
    } catch (const lf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
