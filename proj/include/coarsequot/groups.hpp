#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "coarsequot/graph.hpp"
#include "coarsequot/rational.hpp"
#include "coarsequot/words.hpp"

namespace coarsequot {

enum class PresentationKind { FREE, FREE_PRODUCT, SMALL_CANCELLATION };

struct PieceReport {
    Rational ratio;
    int max_piece = 0;
    int min_relator = 0;
    bool degenerate = false; // single-letter relator
};

// A finite presentation with a solvable word problem at desk scale: free
// groups, free products of free groups, and C'(1/6) one-or-k-relator
// quotients handled by Dehn's algorithm.
class Presentation {
  public:
    static Presentation free_group(int rank);
    static Presentation free_product(std::vector<int> factor_ranks);
    // validates C'(1/6); throws NotSmallCancellation otherwise
    static Presentation small_cancellation(int rank, std::vector<Word> relators);

    int rank() const { return rank_; }
    PresentationKind kind() const { return kind_; }
    const std::vector<Word>& relators() const { return relators_; }
    const std::vector<int>& factor_ranks() const { return factor_ranks_; }
    int min_relator_length() const;

    // factor index of a generator for FREE_PRODUCT, -1 otherwise
    int factor_of(Letter l) const;

  private:
    Presentation() = default;
    int rank_ = 0;
    PresentationKind kind_ = PresentationKind::FREE;
    std::vector<Word> relators_;
    std::vector<int> factor_ranks_;
};

PieceReport piece_ratio(const Presentation& p);

// One Dehn replacement: the removed subword was part of the conjugated
// relator conjugator * relator[index]^sign * conjugator^-1.
struct DehnStep {
    Word conjugator;
    int relator_index = 0;
    int sign = 1;
};

// Repeatedly replaces subwords longer than half a cyclic relator conjugate;
// for C'(1/6) the result is empty iff the word is trivial in the quotient.
Word dehn_reduce(const Presentation& p, Word w, std::vector<DehnStep>* trace = nullptr);

Word normal_form(const Presentation& p, const Word& w);
Word multiply(const Presentation& p, const Word& a, const Word& b);
bool is_identity(const Presentation& p, const Word& w);
bool equal_elements(const Presentation& p, const Word& a, const Word& b);

struct CayleyBall {
    int radius = 0;
    const Presentation* pres = nullptr;
    MetricGraph graph;          // vertices in shortlex layer order, origin first
    std::vector<Word> words;    // representative word per vertex
    Vertex origin = 0;
    std::unordered_map<std::string, Vertex> index;

    std::optional<Vertex> find(const Word& w) const; // group-level lookup
};

CayleyBall cayley_ball(const Presentation& p, int radius, int vertex_cap = 500000);

// g . v by left multiplication; empty when the image leaves the ball.
std::optional<Vertex> act(const Presentation& p, const Word& g, const CayleyBall& ball, Vertex v);

} // namespace coarsequot
