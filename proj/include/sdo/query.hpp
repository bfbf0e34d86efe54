#pragma once

#include <iosfwd>
#include <vector>

#include "sdo/oracle.hpp"

namespace sdo {

struct QueryOptions {
    // When the fault is on the primary path and t lies in M, also consult the
    // left child. Switching it off drops a needed candidate; kept only so the
    // regression tests can show the difference.
    bool rejoin_recursion = true;
};

struct QueryResult {
    Distance distance;
    std::int32_t recursion_depth = 0;  // depth of the deepest node visited
};

// d(s, t) in the input graph without edge (x, y). Ids are input ids; throws
// std::out_of_range for a bad id and std::invalid_argument when (x, y) is not
// an edge.
QueryResult query(const OracleTree& tree, VertexId t, VertexId x, VertexId y,
                  const QueryOptions& options = {});

// Same, with the fault given as an input edge id.
QueryResult query_edge(const OracleTree& tree, VertexId t, EdgeId e,
                       const QueryOptions& options = {});

// d(s, t) in node.graph without Original edge e, all ids local to the node.
QueryResult query_node(const OracleNode& node, VertexId t, EdgeId e,
                       const QueryOptions& options = {});

struct SsrpRecord {
    VertexId target = kNoVertex;
    VertexId upper = kNoVertex;  // endpoint nearer the source
    VertexId lower = kNoVertex;
    Distance distance;
    friend bool operator==(const SsrpRecord&, const SsrpRecord&) = default;
};

// For every reachable t != s (ascending) and every edge of its shortest-path
// tree path (top-down), the replacement distance.
std::vector<SsrpRecord> ssrp(const OracleTree& tree);

// One "t<TAB>x<TAB>y<TAB>dist" line per record.
void write_ssrp_tsv(std::ostream& out, const std::vector<SsrpRecord>& records);

}  // namespace sdo
