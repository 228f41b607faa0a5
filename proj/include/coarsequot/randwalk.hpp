#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coarsequot/groups.hpp"
#include "coarsequot/rational.hpp"

namespace coarsequot {

// Finitely supported probability measure on a group, given by words.
struct Measure {
    std::vector<std::pair<Word, double>> support;
    bool symmetric = false;

    void validate() const;
    static Measure uniform_generators(int rank); // uniform on the 2*rank letters
};

struct WalkSample {
    std::uint64_t seed = 0;
    std::vector<int> increments;        // indices into the support
    std::vector<Word> prefix_endpoints; // w_0 = 1, ..., w_n
    const Word& endpoint() const { return prefix_endpoints.back(); }
};

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream);

WalkSample sample_walk(const Presentation& p, const Measure& m, int n, std::uint64_t seed);

struct DriftEstimate {
    double mean = 0;
    double stderr_of_mean = 0;
    int trials = 0;
    int length = 0;
};

DriftEstimate estimate_drift(const Presentation& p, const Measure& m, int n, int trials,
                             std::uint64_t seed);

// Exact cyclically reduced length for free groups; d(1, g^k)/k otherwise.
Rational translation_length(const Presentation& p, const Word& g, int k_max);

struct QuasiAxis {
    Word g;
    Word base_point;                 // y with near-minimal displacement
    std::vector<Vertex> segment;     // [y, gy] as ball vertices
    std::vector<Vertex> span;        // union of g^r [y, gy] within the ball
    bool truncated = false;          // some translate left the ball
    int measured_quasiconvexity = 0; // of the span, within the ball
};

QuasiAxis build_quasi_axis(const CayleyBall& ball, const Word& g, const Rational& delta,
                           int r_max);

// A geodesic in the Cayley tree as its vertex words.
using TreePath = std::vector<Word>;
TreePath tree_geodesic_words(const Word& from, const Word& to);

struct MatchReport {
    TreePath p_sub, q_sub;
    Word g;
    int achieved_diam = 0;      // min of the two subpath diameters
    int achieved_hausdorff = 0; // Hausdorff distance of g*p_sub vs q_sub
};

// Exact match search between two tree geodesics: conjugators quantified over
// |g| <= conj_radius, subpaths anchored at vertices. NONE is a certificate.
std::optional<MatchReport> find_match_free(const TreePath& p, const TreePath& q, int a, int b,
                                           int conj_radius);

// Serial reference: exhaustive window/conjugator scan inside a ball. Used to
// cross-validate the word-level search on small instances.
std::optional<MatchReport> find_match(const CayleyBall& ball, const Path& p, const Path& q,
                                      int a, int b, int conj_radius,
                                      long long budget = 50'000'000);

int tree_hausdorff(const std::vector<Word>& a, const std::vector<Word>& b);

} // namespace coarsequot
