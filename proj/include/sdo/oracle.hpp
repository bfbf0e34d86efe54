#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "sdo/departing.hpp"
#include "sdo/replacement_paths.hpp"
#include "sdo/separator.hpp"

namespace sdo {

// Edge membership after a separator split. Edges touching the separator
// follow their other endpoint.
enum class EdgeSide : std::uint8_t { M = 0, N = 1, Crossing = 2 };

enum class EdgeClass : std::uint8_t { MOnPrimary, MOffPrimary, N, Crossing };

struct OracleNode;

// A child of a node: its graph lives in the child node; the maps translate
// this node's ids into the child's (kNoVertex / kNoEdge when absent).
struct ChildLink {
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
    std::unique_ptr<OracleNode> node;

    explicit operator bool() const { return node != nullptr; }
};

struct OracleNode {
    std::int32_t depth = 0;
    Graph graph;
    VertexId source = kNoVertex;
    ShortestPathTree spt_s;  // d(s, v)

    // Internal nodes only.
    VertexId separator = kNoVertex;
    PathOnTree primary_path;                    // s -> separator
    std::vector<std::int32_t> anchor;           // deepest primary-path ancestor position
    ShortestPathTree spt_r;                     // d(r, v)
    std::vector<Distance> dist_s_avoiding_gn;   // d(s, v, G_N)
    std::vector<Distance> dist_r_avoiding_gm;   // d(r, v, G_M)
    PathReplacementTable sr_replacements;       // d(s, r, e) per primary edge
    DepTable dep;
    std::vector<Side> side;
    std::vector<EdgeSide> edge_side;
    std::vector<std::int32_t> primary_edge_index;  // per edge; -1 off the primary path
    ChildLink left;
    ChildLink right;

    // Leaves only: base_table[e * n + t] = d(s, t) without Original edge e.
    std::vector<Distance> base_table;

    bool leaf() const { return separator == kNoVertex; }
    VertexId vertex_count() const { return graph.vertex_count(); }
};

struct BuildOptions {
    // Non-root nodes with at most this many vertices become brute-force leaves.
    std::size_t leaf_size = 4;
};

// The oracle for a fixed source. The root covers the component of the
// source, re-indexed densely; the maps translate input ids.
struct OracleTree {
    Graph original_graph;
    VertexId original_source = kNoVertex;
    std::vector<VertexId> to_root;      // input vertex -> root vertex, kNoVertex outside
    std::vector<VertexId> from_root;
    std::vector<EdgeId> edge_to_root;   // input edge -> root edge, kNoEdge outside
    std::unique_ptr<OracleNode> root;   // root->spt_s carries an LCA index
};

struct ChildGraph {
    Graph graph;
    VertexId source = kNoVertex;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
};

OracleTree build_oracle(const Graph& g, VertexId s, const BuildOptions& options = {});

// Builds one node and, recursively, its subtree. Every vertex of g_hat must be
// reachable from s.
std::unique_ptr<OracleNode> build_node(Graph g_hat, VertexId s, std::int32_t depth,
                                       const BuildOptions& options = {});

// G_M plus X = {(r, v, d(r, v, G_M))}, sourced at s.
ChildGraph make_left_child(const OracleNode& node);

// G_N plus Y = {(s_N, v, d(s, v, G_N))}, sourced at a fresh vertex s_N
// (appended last). When s is the separator the Y edges start at s itself.
ChildGraph make_right_child(const OracleNode& node);

// Throws std::out_of_range for an edge id outside the node graph.
EdgeClass classify(const OracleNode& node, EdgeId e);

std::int32_t tree_depth(const OracleTree& tree);
std::size_t node_count(const OracleTree& tree);
void for_each_node(const OracleTree& tree, const std::function<void(const OracleNode&)>& fn);

// Derives anchor and other lookup fields from the stored ones; used after
// deserialisation.
void rebuild_derived(OracleNode& node);

}  // namespace sdo
