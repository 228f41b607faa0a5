#pragma once

#include <cstdint>
#include <vector>

#include "coarsequot/graph.hpp"

namespace coarsequot {

// Sampling policy shared by the measurement kernels. EXHAUSTIVE quantifies
// over all tuples and all geodesic choices (exact constants); RANDOM draws
// seeded tuples along canonical geodesics and yields lower bounds.
struct SamplingSpec {
    enum Mode { EXHAUSTIVE, RANDOM };
    Mode mode = EXHAUSTIVE;
    int count = 0;
    std::uint64_t seed = 0;
    int exhaustive_vertex_cap = 400;

    static SamplingSpec exhaustive(int cap = 400) { return {EXHAUSTIVE, 0, 0, cap}; }
    static SamplingSpec random(int count, std::uint64_t seed) {
        return {RANDOM, count, seed, 400};
    }
};

struct Measurement {
    int value = 0;
    bool exact = true; // false: sampled lower bound
};

// All-pairs BFS distances, parallel over sources. Row-major n*n.
std::vector<std::int16_t> all_pairs_distances(const MetricGraph& g);

// Max over geodesics a->b of the min distance to p (the "farthest geodesic"
// bottleneck). dist_a/dist_b are BFS rows from a and b, dist_p from p.
int max_geodesic_distance(const MetricGraph& g, const std::vector<int>& dist_a,
                          const std::vector<int>& dist_b, Vertex a, Vertex b,
                          const std::vector<int>& dist_p);

// Least delta such that every examined triangle is delta-slim, quantifying
// over every geodesic choice of every side in EXHAUSTIVE mode.
Measurement slim_constant(const MetricGraph& g, const SamplingSpec& spec);

// Least K with every examined geodesic between members of y inside N_K(y).
Measurement quasiconvexity_constant(const MetricGraph& g, const Subspace& y,
                                    const SamplingSpec& spec);

int fattened_intersection_diameter(const MetricGraph& g, const Subspace& y,
                                   const Subspace& yprime, int t);

// Max over distinct pairs of diam(N_{2K+2delta}(Y') /\ Y); empty or singleton
// intersections contribute 0.
int separation_m0(const MetricGraph& g, const std::vector<Subspace>& family, int delta, int k);

} // namespace coarsequot
