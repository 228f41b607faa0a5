#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarsequot/coning.hpp"
#include "coarsequot/constants.hpp"
#include "coarsequot/freetree.hpp"
#include "coarsequot/groups.hpp"

namespace coarsequot {

// One member of the spinning family: the window segment of a translate line
// together with its owner data.
struct SpinningMember {
    Subspace segment;
    int walk_index = 0; // which relator/axis family the line belongs to
    Word owner;         // g with Y = g * axis(core)
    Word h_gen;         // generator of H_Y, i.e. g * w * g^-1
    TreeLine line;      // exact tree form
};

// An element of N = <<H_Y>> as a product of conjugated relator powers.
struct Syllable {
    Word conjugator;
    int relator_index = 0;
    int exponent = 0;
};

struct NormalElement {
    std::vector<Syllable> syllables;

    int complexity() const; // total exponent weight; identity is 0
    bool trivial() const { return syllables.empty(); }
    Word element(const std::vector<Word>& relators) const;
};

// Left-multiplies by one conjugated relator power and renormalizes.
NormalElement left_multiply(const NormalElement& h, const Syllable& s,
                            const std::vector<Word>& relators);

// Writes h as a product of conjugated relators via a traced Dehn reduction;
// throws SearchExhausted when h is not visibly in the normal closure.
NormalElement express_in_normal_closure(const Presentation& quotient_pres, const Word& h);

// A spinning instance over a free-group window: X = Cayley ball, the family
// is every translate line meeting the window, X-hat its cone-off.
class SpinningInstance {
  public:
    // walks: cyclically reduced relator cores, one per independent walk
    SpinningInstance(int rank, std::vector<Word> walks, int ball_radius, Rational l_spin,
                     int vertex_cap = 2'000'000);

    const Presentation& group() const { return *pres_; }
    const Presentation& quotient_group() const { return *quotient_pres_; }
    const CayleyBall& ball() const { return *ball_; }
    const ConeOff& cone() const { return *cone_; }
    const std::vector<SpinningMember>& family() const { return members_; }
    const std::vector<Word>& relators() const { return relators_; }
    const FreeTreeGeometry& geometry(int walk_index) const { return geometries_[walk_index]; }
    const Rational& l_spin() const { return l_spin_; }
    int radius() const { return radius_; }

    std::optional<int> member_of_line(int walk_index, const TreeLine& l) const;
    // image of an X-hat vertex under a group element; empty when it leaves
    // the window
    std::optional<Vertex> transport(const Word& g, Vertex v) const;

    // exact projection distance d^pi_Y(x, y) for window vertices (base or
    // cone), computed in the full tree
    int proj_distance_exact(int member_index, Vertex x, Vertex y) const;
    int proj_distance_words(int member_index, const Word& x, const Word& y) const;

    // equivariance spot-check: translated members stay in the family with
    // conjugated generators
    void check_equivariance(int samples, std::uint64_t seed) const;

  private:
    std::unique_ptr<Presentation> pres_;
    std::unique_ptr<Presentation> quotient_pres_;
    std::unique_ptr<CayleyBall> ball_;
    std::vector<Word> relators_;
    std::vector<FreeTreeGeometry> geometries_;
    std::vector<SpinningMember> members_;
    std::unordered_map<std::string, int> line_index_;
    std::unique_ptr<ConeOff> cone_;
    Rational l_spin_;
    int radius_ = 0;
};

struct SpinningReport {
    int min_observed = -1; // -1: no certified sample
    bool pass = false;
    long long samples = 0;
};

// Samples (Y, x, r) and measures d^pi_Y(x, h_Y^r x) against L.
SpinningReport verify_spinning(const SpinningInstance& inst, int sample_count,
                               std::uint64_t seed);

struct ShorteningPair {
    int member_index = -1;
    int exponent = 0; // h_Y = gen^exponent
    bool fixed = false;
};

ShorteningPair find_shortening_pair(const SpinningInstance& inst, Vertex x,
                                    const NormalElement& h);

// alpha_1 * h_Y alpha_2 split at the cone vertex of the member.
Path bend(const SpinningInstance& inst, const Path& path, int member_index, const Word& h_y);

struct QuotientGraphResult {
    std::vector<int> class_of; // per X-hat vertex
    std::vector<Vertex> rep;   // canonical representative per class
    std::unique_ptr<MetricGraph> graph;
    int base_class_count = 0;
    int saturation_budget = 0;
    bool truncated = false; // some generator image left the window
};

QuotientGraphResult build_quotient(const SpinningInstance& inst, int saturation_budget);

struct TriangleLift {
    bool closed = false;
    std::vector<Path> sides; // three geodesics in X-hat
    std::vector<int> complexity_trace;
    std::optional<NormalElement> defect; // set when open
};

TriangleLift lift_triangle(const SpinningInstance& inst, const QuotientGraphResult& q,
                           int class_a, int class_b, int class_c);

struct InjectivityReport {
    int min_displacement = -1; // over certified samples
    Rational tau_ledger;
    bool pass = false;
    bool freeness_ok = true;
    long long samples = 0;
};

InjectivityReport injectivity_report(const SpinningInstance& inst, const Rational& tau,
                                     int conjugator_budget, int sample_count,
                                     std::uint64_t seed);

struct MinimalPair {
    Vertex x = 0, y = 0;
    int dist = 0;
    bool certified = false;
};

MinimalPair certify_minimal(const SpinningInstance& inst, const QuotientGraphResult& q,
                            int class_a, int class_b);

struct IsoprojReport {
    bool applicable = false;
    int sup_projection = 0;
    int dist_base = 0;
    int dist_cone = 0;
    int dist_quotient = 0;
    bool lower_bound_ok = false;
    bool equality_ok = false;
};

// Checks (1/(L/20+2C)) d_X <= d_Xhat = d_Xbar for pairs with all projections
// at most L/20.
IsoprojReport isoproj_check(const SpinningInstance& inst, const QuotientGraphResult& q,
                            const Rational& c_bgi, Vertex x, Vertex y);

} // namespace coarsequot
