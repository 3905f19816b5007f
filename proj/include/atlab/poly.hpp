#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient of prod x_v^{e(v)} in the graph polynomial
// prod_{uv in E, u<v} (x_u - x_v), by sparse exact expansion.
// Requires sum e = edge count.
BigInt graph_poly_coefficient(const Graph& g, const std::vector<int>& e);
BigInt graph_poly_coefficient(const Multigraph& g, const std::vector<int>& e);

}  // namespace atlab
