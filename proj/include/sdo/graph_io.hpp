#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sdo/graph.hpp"

namespace sdo {

// Raised for malformed graph text; line() is 1-based (0 when not tied to a line).
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format: first data line "n m", then m lines "u v" (unit weight).
// Vertices are 0-indexed; '#' starts a comment. Self-loops and repeated
// edges are rejected, so every input graph is simple.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Writes Original edges only; Virtual edges have no textual form.
void write_graph(std::ostream& out, const Graph& g);

}  // namespace sdo
