#include "sdo/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace sdo {

GraphParseError::GraphParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

// Next line with content after stripping comments; false at end of input.
bool next_data_line(std::istream& in, std::string& out, std::size_t& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        if (raw.find_first_not_of(" \t\r") != std::string::npos) {
            out = raw;
            return true;
        }
    }
    return false;
}

long long parse_field(std::istringstream& fields, std::size_t line_no, const char* what) {
    long long value = 0;
    if (!(fields >> value)) {
        throw GraphParseError(line_no, std::string("expected integer ") + what);
    }
    return value;
}

void expect_end(std::istringstream& fields, std::size_t line_no) {
    std::string rest;
    if (fields >> rest) {
        throw GraphParseError(line_no, "unexpected trailing token '" + rest + "'");
    }
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::size_t line_no = 0;
    std::string line;
    if (!next_data_line(in, line, line_no)) {
        throw GraphParseError(0, "empty graph file: missing 'n m' header");
    }
    std::istringstream header(line);
    const long long n = parse_field(header, line_no, "vertex count n");
    const long long m = parse_field(header, line_no, "edge count m");
    expect_end(header, line_no);
    if (n < 0 || m < 0 || n > std::numeric_limits<VertexId>::max() ||
        m > std::numeric_limits<EdgeId>::max()) {
        throw GraphParseError(line_no, "vertex/edge counts out of range");
    }

    Graph g(static_cast<VertexId>(n));
    std::unordered_set<std::uint64_t> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, line_no)) {
            throw GraphParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                               std::to_string(i));
        }
        std::istringstream fields(line);
        const long long u = parse_field(fields, line_no, "endpoint u");
        const long long v = parse_field(fields, line_no, "endpoint v");
        expect_end(fields, line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw GraphParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw GraphParseError(line_no, "self-loop on vertex " + std::to_string(u));
        }
        const auto lo = static_cast<std::uint64_t>(std::min(u, v));
        const auto hi = static_cast<std::uint64_t>(std::max(u, v));
        if (!seen.insert((lo << 32) | hi).second) {
            throw GraphParseError(line_no, "repeated edge (" + std::to_string(u) + ", " +
                                               std::to_string(v) + ")");
        }
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (next_data_line(in, line, line_no)) {
        throw GraphParseError(line_no, "more edge lines than the declared m");
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphParseError(0, "cannot open graph file '" + path + "'");
    }
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    EdgeId originals = 0;
    for (const Edge& e : g.edges()) {
        originals += e.original() ? 1 : 0;
    }
    out << g.vertex_count() << ' ' << originals << '\n';
    for (const Edge& e : g.edges()) {
        if (e.original()) {
            out << e.u << ' ' << e.v << '\n';
        }
    }
}

}  // namespace sdo
