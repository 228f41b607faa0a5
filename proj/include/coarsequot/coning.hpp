#pragma once

#include <vector>

#include "coarsequot/graph.hpp"
#include "coarsequot/rational.hpp"
#include "coarsequot/slimness.hpp"

namespace coarsequot {

// Cone-off of a base graph: one new vertex per family member, joined to
// exactly the member's vertices. Base vertices keep their ids; the cone
// vertex over family[i] is base_count + i.
struct ConeOff {
    const MetricGraph* base = nullptr;
    std::vector<Subspace> family;
    MetricGraph graph;

    Vertex cone_vertex(int family_index) const;
    bool is_cone(Vertex v) const;
    int family_index(Vertex v) const; // -1 for base vertices
};

ConeOff build_cone_off(const MetricGraph& g, std::vector<Subspace> family);

// X' of the modified construction: cones over the A-neighborhoods of the
// rho images of the non-maximal domains.
ConeOff build_modified_cone_off(const MetricGraph& g,
                                const std::vector<std::vector<Vertex>>& rho_images,
                                const Rational& a);

struct DeElectrification {
    struct Piece {
        bool is_crossing = false;
        Path path;      // base segment, or the geodesic replacing a crossing
        int owner = -1; // family index for crossings
    };
    std::vector<Piece> pieces;

    std::vector<Vertex> base_vertices() const; // concatenated image in X
    int base_length() const;
};

// Replaces every two-edge cone crossing of gamma by a base geodesic between
// its endpoints. gamma must start and end in the base.
DeElectrification de_electrify(const ConeOff& c, const Path& gamma);

struct SprianoReport {
    int measured_d = 0;
    int pairs_checked = 0;
    bool exact = true; // false when pair sampling or geodesic caps kicked in
};

// Measures the defect D with base geodesics swept exhaustively and cone-off
// geodesics enumerated up to a cap.
SprianoReport check_spriano(const ConeOff& c, const SamplingSpec& spec,
                            std::size_t geodesic_cap = 4096);

// Extended projection from cone-off vertices: base points project as usual,
// a cone vertex projects to the union of its members' projections.
ProjectionSet extended_projection(const ConeOff& c, int target_family_index, Vertex x);

int extended_proj_distance(const ConeOff& c, int target_family_index, Vertex x, Vertex y);

struct BgiViolation {
    Vertex x = 0, y = 0;
    int family_index = -1;
    int proj_dist = 0;
};

struct BgiReport {
    std::vector<BgiViolation> violations;
    long long tuples_checked = 0;
    int max_proj_dist_without_cone = 0; // largest d^pi over pairs avoiding the cone
};

// For every examined (x, y, Y): if d^pi_Y(x,y) > C then every cone-off
// geodesic from x to y must pass through v_Y.
BgiReport strong_bgi_check(const ConeOff& c, const Rational& threshold_c,
                           const SamplingSpec& spec);

} // namespace coarsequot
