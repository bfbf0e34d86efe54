#include "sdo/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "sdo/baseline.hpp"
#include "sdo/generators.hpp"
#include "sdo/graph_io.hpp"
#include "sdo/query.hpp"
#include "sdo/serialize.hpp"

namespace sdo {

namespace {

using Clock = std::chrono::steady_clock;

OracleTree load_or_build(const RunConfig& config) {
    if (is_oracle_file(config.graph_path)) {
        OracleTree tree = load_oracle_file(config.graph_path);
        if (tree.original_source != config.source) {
            throw std::invalid_argument("oracle was built for source " +
                                        std::to_string(tree.original_source) + ", not " +
                                        std::to_string(config.source));
        }
        return tree;
    }
    const Graph g = read_graph_file(config.graph_path);
    if (!g.contains(config.source)) {
        throw std::out_of_range("source " + std::to_string(config.source) + " out of range");
    }
    return build_oracle(g, config.source);
}

int do_build(const RunConfig& config, std::ostream& out) {
    const Graph g = read_graph_file(config.graph_path);
    if (!g.contains(config.source)) {
        throw std::out_of_range("source " + std::to_string(config.source) + " out of range");
    }
    const OracleTree tree = build_oracle(g, config.source);
    const std::string target = config.graph_path + ".sdo";
    save_oracle_file(target, tree);

    std::size_t leaves = 0;
    std::size_t dep_entries = 0;
    std::size_t max_dep = 0;
    for_each_node(tree, [&](const OracleNode& node) {
        leaves += node.leaf() ? 1 : 0;
        dep_entries += node.dep.total_entries();
        max_dep = std::max(max_dep, node.dep.max_entries());
    });
    out << "n " << g.vertex_count() << '\n'
        << "m " << g.edge_count() << '\n'
        << "depth " << tree_depth(tree) << '\n'
        << "nodes " << node_count(tree) << '\n'
        << "leaves " << leaves << '\n'
        << "dep_entries " << dep_entries << '\n'
        << "max_dep " << max_dep << '\n'
        << "oracle " << target << '\n';
    return 0;
}

int do_query(const RunConfig& config, std::ostream& out) {
    const OracleTree tree = load_or_build(config);
    const QueryArgs& q = *config.query_args;
    out << query(tree, q.t, q.x, q.y).distance.to_string() << '\n';
    return 0;
}

int do_ssrp(const RunConfig& config, std::ostream& out) {
    const OracleTree tree = load_or_build(config);
    write_ssrp_tsv(out, ssrp(tree));
    return 0;
}

// Returns false and writes a reproduction dump on the first mismatch.
bool verify_one(const std::string& description, const Graph& g, VertexId s, std::ostream& out) {
    const OracleTree tree = build_oracle(g, s);
    const auto got = ssrp(tree);
    const auto want = brute_ssrp(g, s);
    std::size_t i = 0;
    while (i < got.size() && i < want.size() && got[i] == want[i]) {
        ++i;
    }
    if (i == got.size() && i == want.size()) {
        return true;
    }
    out << "MISMATCH " << description << '\n';
    if (i < got.size() && i < want.size()) {
        const SsrpRecord& w = want[i];
        out << "source " << s << " t " << w.target << " edge " << w.upper << ' ' << w.lower
            << " expected " << w.distance.to_string() << " got " << got[i].distance.to_string()
            << '\n';
    } else {
        out << "record counts differ: expected " << want.size() << " got " << got.size() << '\n';
    }
    out << "# graph\n";
    write_graph(out, g);
    return false;
}

int do_verify(const RunConfig& config, std::ostream& out) {
    if (!config.graph_path.empty()) {
        const Graph g = read_graph_file(config.graph_path);
        if (!g.contains(config.source)) {
            throw std::out_of_range("source " + std::to_string(config.source) + " out of range");
        }
        if (!verify_one(config.graph_path, g, config.source, out)) {
            return 1;
        }
        out << "ok 1 graph\n";
        return 0;
    }
    for (std::size_t i = 0; i < config.count; ++i) {
        const GeneratedGraph inst = verify_instance(config.seed, i, config.max_n);
        if (!verify_one(inst.description, inst.graph, inst.source, out)) {
            return 1;
        }
    }
    out << "ok " << config.count << " graphs\n";
    return 0;
}

int do_bench(const RunConfig& config, std::ostream& out) {
    out << "n\tm\tbuild_ms\tmax_dep\tquery_us\n";
    for (VertexId n : config.sizes) {
        const GeneratedGraph inst = generate(Family::Sparse, n, config.seed);
        const auto t0 = Clock::now();
        const OracleTree tree = build_oracle(inst.graph, inst.source);
        const auto t1 = Clock::now();

        const ShortestPathTree& spt = tree.root->spt_s;
        std::mt19937_64 rng(config.seed);
        std::uniform_int_distribution<VertexId> pick(1, tree.root->vertex_count() - 1);
        std::vector<std::pair<VertexId, EdgeId>> work;
        work.reserve(config.queries);
        for (std::size_t i = 0; i < config.queries; ++i) {
            const VertexId t = pick(rng);
            std::uniform_int_distribution<std::int32_t> hop(0, spt.depth[static_cast<std::size_t>(t)] - 1);
            VertexId v = t;
            for (std::int32_t k = hop(rng); k > 0; --k) {
                v = spt.parent[static_cast<std::size_t>(v)];
            }
            work.emplace_back(tree.from_root[static_cast<std::size_t>(t)],
                              spt.parent_edge[static_cast<std::size_t>(v)]);
        }
        Weight checksum = 0;
        const auto q0 = Clock::now();
        for (const auto& [t, e] : work) {
            const Distance d = query_edge(tree, t, e).distance;
            checksum += d.finite() ? d.value() : 0;
        }
        const auto q1 = Clock::now();

        const double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double query_us = work.empty()
            ? 0.0
            : std::chrono::duration<double, std::micro>(q1 - q0).count() / static_cast<double>(work.size());
        out << n << '\t' << inst.graph.edge_count() << '\t' << build_ms << '\t'
            << tree.root->dep.max_entries() << '\t' << query_us << '\n';
        if (checksum < 0) {
            out << "checksum underflow\n";
        }
    }
    return 0;
}

}  // namespace

void validate(const RunConfig& config) {
    switch (config.command) {
        case Command::Query:
            if (!config.query_args) {
                throw std::invalid_argument("query needs t x y");
            }
            [[fallthrough]];
        case Command::Build:
        case Command::Ssrp:
            if (config.graph_path.empty()) {
                throw std::invalid_argument("a graph path is required");
            }
            break;
        case Command::Verify:
            if (config.max_n < 5) {
                throw std::invalid_argument("--max-n must be at least 5");
            }
            break;
        case Command::Bench:
            if (config.sizes.empty()) {
                throw std::invalid_argument("bench needs --sizes");
            }
            for (VertexId n : config.sizes) {
                if (n < 2) {
                    throw std::invalid_argument("bench sizes must be at least 2");
                }
            }
            break;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::Build: return do_build(config, out);
            case Command::Query: return do_query(config, out);
            case Command::Ssrp: return do_ssrp(config, out);
            case Command::Verify: return do_verify(config, out);
            case Command::Bench: return do_bench(config, out);
        }
    } catch (const GraphParseError& e) {
        err << "error: " << config.graph_path << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"Single-source distance oracle tolerating one edge fault"};
    app.require_subcommand(1);
    RunConfig config;
    QueryArgs q;

    auto* build = app.add_subcommand("build", "Build an oracle and save it next to the graph");
    build->add_option("graph", config.graph_path, "Graph file")->required();
    build->add_option("source", config.source, "Source vertex")->required();

    auto* query_cmd = app.add_subcommand("query", "Distance from s to t avoiding edge (x, y)");
    query_cmd->add_option("graph", config.graph_path, "Graph or oracle file")->required();
    query_cmd->add_option("source", config.source, "Source vertex")->required();
    query_cmd->add_option("t", q.t)->required();
    query_cmd->add_option("x", q.x)->required();
    query_cmd->add_option("y", q.y)->required();

    auto* ssrp_cmd = app.add_subcommand("ssrp", "All replacement distances as TSV");
    ssrp_cmd->add_option("graph", config.graph_path, "Graph or oracle file")->required();
    ssrp_cmd->add_option("source", config.source, "Source vertex")->required();

    auto* verify = app.add_subcommand("verify", "Compare against the brute-force baseline");
    verify->add_option("--seed", config.seed);
    verify->add_option("--count", config.count);
    verify->add_option("--max-n", config.max_n);
    verify->add_option("--graph", config.graph_path, "Check this graph instead of generated ones");
    verify->add_option("--source", config.source);

    auto* bench = app.add_subcommand("bench", "Build and query timings on the sparse family");
    bench->add_option("--sizes", config.sizes, "Comma-separated vertex counts")
        ->required()
        ->delimiter(',');
    bench->add_option("--seed", config.seed);
    bench->add_option("--queries", config.queries);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*build) config.command = Command::Build;
    if (*query_cmd) {
        config.command = Command::Query;
        config.query_args = q;
    }
    if (*ssrp_cmd) config.command = Command::Ssrp;
    if (*verify) config.command = Command::Verify;
    if (*bench) config.command = Command::Bench;
    return run(config, std::cout, std::cerr);
}

}  // namespace sdo
