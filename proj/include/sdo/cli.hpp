#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdo/types.hpp"

namespace sdo {

enum class Command : std::uint8_t { Build, Query, Ssrp, Verify, Bench };

struct QueryArgs {
    VertexId t = kNoVertex;
    VertexId x = kNoVertex;
    VertexId y = kNoVertex;
};

struct RunConfig {
    Command command = Command::Build;
    std::string graph_path;     // graph text or saved oracle; optional for verify
    VertexId source = 0;
    std::optional<QueryArgs> query_args;
    std::uint64_t seed = 1;
    std::size_t count = 50;     // verify instances
    VertexId max_n = 120;       // verify size cap
    std::vector<VertexId> sizes;  // bench
    std::size_t queries = 10000;  // bench queries per size
};

// Throws std::invalid_argument when command-specific fields are missing.
void validate(const RunConfig& config);

// Executes one command. Returns 0 on success, 1 on a verify mismatch and 2 on
// input errors (reported on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and runs; the process entry point.
int cli_main(int argc, char** argv);

}  // namespace sdo
