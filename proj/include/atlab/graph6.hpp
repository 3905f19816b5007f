#pragma once

#include <string>

#include "atlab/graph.hpp"

namespace atlab {

// Strict graph6 codec (McKay's format).  Orders up to 64 are supported; the
// parser rejects bad bytes, wrong lengths and nonzero padding, naming the
// byte offset.  Emission is label-preserving, not canonicalizing.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Plain text alternative: "n m" header line, then m lines "u v", 0-based.
Graph parse_adjacency_text(const std::string& text);
std::string to_adjacency_text(const Graph& g);

}  // namespace atlab
