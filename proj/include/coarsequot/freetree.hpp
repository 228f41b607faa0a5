#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coarsequot/words.hpp"

namespace coarsequot {

// One of the two periodic reading directions of a line: rotation `offset`
// of the period word (sign > 0) or of its inverse (sign < 0).
struct PeriodicDir {
    std::int8_t sign = 1;
    int offset = 0;
};

// A bi-infinite geodesic line in the Cayley tree of a free group, stored in
// canonical form: `anchor` is the unique point of the line closest to the
// identity, and dir_a/dir_b are the two outgoing periodic directions with
// dir_a reading lexicographically no larger than dir_b. Line equality is
// equality of keys.
struct TreeLine {
    Word anchor;
    PeriodicDir dir_a, dir_b;
};

// Exact geometry of translates of the axis of one cyclically reduced word
// ("the period family"): projections, segments, translation. Everything here
// is global tree arithmetic on words, so no ball window can truncate it.
class FreeTreeGeometry {
  public:
    FreeTreeGeometry(int rank, Word cyclically_reduced_core);

    int rank() const { return rank_; }
    const Word& core() const { return core_; }
    int period() const { return static_cast<int>(core_.size()); }

    Letter dir_letter(const PeriodicDir& d, long long step) const;
    Word dir_word(const PeriodicDir& d) const;

    // the translate g * axis(core)
    TreeLine axis(const Word& g) const;
    // line through `point` whose forward reading is `fwd`
    TreeLine line_at(const Word& point, const PeriodicDir& fwd) const;
    TreeLine translate(const Word& n, const TreeLine& l) const;

    struct Projection {
        long long offset = 0; // signed steps from the anchor along dir_a
        int dist = 0;         // distance from the argument to the line
    };
    Projection project(const TreeLine& l, const Word& x) const;

    Word point_at(const TreeLine& l, long long offset) const;

    // points of the line with |point| <= radius, with their offsets
    std::vector<std::pair<Word, long long>> segment_within(const TreeLine& l, int radius) const;

    // diam(pi_l(x) u pi_l(y)) -- projections in a tree are single points
    int proj_distance(const TreeLine& l, const Word& x, const Word& y) const;

    std::string key(const TreeLine& l) const;

  private:
    PeriodicDir backward_of(const PeriodicDir& d, long long steps) const;
    PeriodicDir forward_shift(const PeriodicDir& d, long long steps) const;

    int rank_;
    Word core_;
    Word core_inv_;
};

} // namespace coarsequot
