#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarsequot/coning.hpp"
#include "coarsequot/rational.hpp"

namespace coarsequot {

// A finite family with projection distance functions d^pi_Y: (Y,U,V) -> int,
// stored as a dense table. GEOMETRIC families are tabulated from a cone-off;
// EXPLICIT ones come from user tables.
struct ProjectionFamily {
    enum Provenance { GEOMETRIC, EXPLICIT };
    Provenance provenance = EXPLICIT;
    int size = 0;
    std::vector<std::string> names;
    std::vector<int> table; // size^3; entry -1 where y == u or y == v

    int dpi(int y, int u, int v) const { return table[(static_cast<size_t>(y) * size + u) * size + v]; }
    void set(int y, int u, int v, int d) { table[(static_cast<size_t>(y) * size + u) * size + v] = d; }

    // nearest-subspace sets attached by augment_with_points
    std::vector<std::vector<int>> nearest_subspaces;
};

// d^pi over the cone-off family itself (elements = the coned subspaces).
ProjectionFamily geometric_family(const ConeOff& c, int element_cap = 200);

// Elements = all base vertices and all cone vertices; base points carry the
// constant projection map. Requires X to be R-coboundedly covered.
ProjectionFamily augment_with_points(const ConeOff& c, const Rational& r, int element_cap = 400);

struct AxiomWitness {
    int y = -1, u = -1, v = -1, w = -1;
    Rational value;
};

struct AxiomReport {
    Rational theta;
    bool symmetry_ok = true;
    bool triangle_ok = true;
    bool bounded_ok = true;   // (III)
    bool behrstock_ok = true; // (IV)
    AxiomWitness symmetry_witness, triangle_witness, bounded_witness, behrstock_witness;
    // (V) on a finite family is a count statistic, not pass/fail
    int max_big_count = 0;
    AxiomWitness big_count_witness;
    // strong axiom (IV') failures under the unmodified distances
    long long strong_failures = 0;
    AxiomWitness strong_witness;
    Rational min_theta_bounded;   // least constants that would pass
    Rational min_theta_behrstock;

    bool passes() const { return symmetry_ok && triangle_ok && bounded_ok && behrstock_ok; }
};

AxiomReport verify_projection_axioms(const ProjectionFamily& f, const Rational& theta);

struct ProjectionComplex {
    Rational zhe;
    int size = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    bool connected = false;

    std::vector<int> bfs(int src) const; // -1 where unreachable
    std::vector<int> bfs_avoiding(int src, const std::vector<char>& banned) const;
};

// U ~ V iff d_Y(U,V) <= Zhe for every Y outside {U,V}.
ProjectionComplex build_projection_complex(const ProjectionFamily& f, const Rational& zhe);

struct PathImageViolation {
    int y = -1, u = -1, v = -1;
    int gap = 0;
    bool geodesic_case = false;
};

struct PathImageReport {
    std::vector<PathImageViolation> violations;
    long long pairs_checked = 0;
    int max_path_gap = 0; // over pairs joined avoiding N_2(Y)
    int max_geo_gap = 0;  // over pairs with a geodesic avoiding Y
};

// Bounded path image and strong BGI for the complex, with thresholds widened
// by the 2-theta-per-side surrogate sandwich.
PathImageReport bounded_path_image_check(const ProjectionComplex& p, const ProjectionFamily& f,
                                         const Rational& theta);

} // namespace coarsequot
