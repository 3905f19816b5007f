#pragma once

#include <stdexcept>
#include <string>

namespace atlab {

// Malformed external input (graph6, adjacency lists, JSON).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold for the given input.
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a search cap.  The message names the cap and the offending size.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed internal property failed; indicates a bug, not bad input.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace atlab
