#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nplatonic/plane_graph.hpp"

namespace nplatonic {

/// Undirected dot graph; each vertex's rotation is listed in a leading
/// comment block. Not meant to be read back.
std::string render_dot(const PlaneGraph& g);

/// Splits a stream of ".rot" graphs (each starting at its "n" header).
std::vector<PlaneGraph> parse_many(std::string_view text);

/// Runs one command line. Exit codes: 0 success, 1 domain error, 2 usage.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nplatonic
