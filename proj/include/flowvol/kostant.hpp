#pragma once

// Kostant partition function: the number of nonnegative integer a-flows.

#include "flowvol/graph.hpp"

#include <cstddef>
#include <vector>

namespace flowvol {

/// K_G(a) by vertex-ordered enumeration. Vertices are visited in increasing
/// order; once vertex v is reached its in-flow is fixed and the surplus
/// a_v + inflow_v is split over the out-edges of v. Parallel edges to the
/// same head are folded into a multiset count, and states are memoised on
/// (vertex, pending in-flows of later vertices). Accepts disconnected graphs.
Integer kpf(const DirectedStepGraph &g, const NetFlow &a);

/// All integer a-flows in lexicographic order of the canonical edge list,
/// truncated after `cap` entries.
std::vector<FlowAssignment> list_flows(const DirectedStepGraph &g,
                                       const NetFlow &a, std::size_t cap);

} // namespace flowvol
