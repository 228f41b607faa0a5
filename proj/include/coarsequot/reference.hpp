#pragma once

#include <vector>

#include "coarsequot/graph.hpp"

namespace coarsequot::reference {

// Serial brute-force implementations used as oracles by the tests and the
// benchmark. These enumerate geodesics explicitly and take no shortcuts;
// keep them independent of the kernels in slimness.cpp.

std::vector<Path> all_geodesics(const MetricGraph& g, Vertex u, Vertex v,
                                std::size_t cap = 200000);

int slim_constant(const MetricGraph& g);

int quasiconvexity_constant(const MetricGraph& g, const Subspace& y);

int hausdorff_distance(const MetricGraph& g, const std::vector<Vertex>& a,
                       const std::vector<Vertex>& b);

} // namespace coarsequot::reference
