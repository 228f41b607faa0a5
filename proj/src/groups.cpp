#include "coarsequot/groups.hpp"

#include <algorithm>
#include <numeric>

namespace coarsequot {

namespace {

// all cyclic rotations of r and r^-1, each tagged with the conjugator that
// writes the rotation as q * r^sign * q^-1
struct SymmetrizedRelator {
    Word word;
    Word conjugator;
    int relator_index;
    int sign;
};

std::vector<SymmetrizedRelator> symmetrize(const std::vector<Word>& relators) {
    std::vector<SymmetrizedRelator> out;
    for (size_t idx = 0; idx < relators.size(); ++idx) {
        for (int sign : {1, -1}) {
            Word r = sign == 1 ? relators[idx] : word_inverse(relators[idx]);
            for (size_t rot = 0; rot < r.size(); ++rot) {
                Word rotated(r.begin() + rot, r.end());
                rotated.insert(rotated.end(), r.begin(), r.begin() + rot);
                // rotated = prefix^-1 * r * prefix for prefix = r[0..rot)
                Word prefix(r.begin(), r.begin() + rot);
                out.push_back({std::move(rotated), word_inverse(prefix),
                               static_cast<int>(idx), sign});
            }
        }
    }
    return out;
}

} // namespace

Presentation Presentation::free_group(int rank) {
    Presentation p;
    p.rank_ = rank;
    p.kind_ = PresentationKind::FREE;
    return p;
}

Presentation Presentation::free_product(std::vector<int> factor_ranks) {
    Presentation p;
    p.rank_ = std::accumulate(factor_ranks.begin(), factor_ranks.end(), 0);
    p.kind_ = PresentationKind::FREE_PRODUCT;
    p.factor_ranks_ = std::move(factor_ranks);
    return p;
}

Presentation Presentation::small_cancellation(int rank, std::vector<Word> relators) {
    Presentation p;
    p.rank_ = rank;
    p.kind_ = PresentationKind::SMALL_CANCELLATION;
    p.relators_ = std::move(relators);
    for (auto& r : p.relators_) {
        r = cyclic_reduce(r).core;
        if (r.empty()) throw NotSmallCancellation("trivial relator");
    }

    // Power relators g^n on pairwise distinct generators also satisfy Dehn's
    // algorithm (Newman's spelling theorem), and the cyclic-quotient toys
    // rely on them; everything else must be genuinely C'(1/6).
    bool all_powers = true;
    std::vector<int> bases;
    for (const auto& r : p.relators_) {
        Letter base = r.front();
        for (Letter l : r) all_powers = all_powers && (l == base);
        if (std::find(bases.begin(), bases.end(), base > 0 ? base : -base) != bases.end())
            all_powers = false;
        bases.push_back(base > 0 ? base : -base);
        if (r.size() < 2) all_powers = false;
    }
    if (all_powers) return p;

    auto report = piece_ratio(p);
    if (report.degenerate || !(report.ratio < Rational(1, 6)))
        throw NotSmallCancellation("piece ratio " + report.ratio.str() + " not below 1/6");
    return p;
}

int Presentation::min_relator_length() const {
    int m = 0;
    for (const auto& r : relators_)
        m = (m == 0) ? static_cast<int>(r.size())
                     : std::min<int>(m, static_cast<int>(r.size()));
    return m;
}

int Presentation::factor_of(Letter l) const {
    if (kind_ != PresentationKind::FREE_PRODUCT) return -1;
    int g = l > 0 ? l : -l;
    int offset = 0;
    for (size_t i = 0; i < factor_ranks_.size(); ++i) {
        offset += factor_ranks_[i];
        if (g <= offset) return static_cast<int>(i);
    }
    return -1;
}

PieceReport piece_ratio(const Presentation& p) {
    PieceReport report;
    if (p.relators().empty()) throw PreconditionBroken("piece_ratio needs a relator");
    report.min_relator = p.min_relator_length();
    if (report.min_relator <= 1) {
        report.degenerate = true;
        report.ratio = Rational(0);
        return report;
    }
    auto sym = symmetrize(p.relators());
    int max_piece = 0;
    for (size_t i = 0; i < sym.size(); ++i)
        for (size_t j = i + 1; j < sym.size(); ++j) {
            if (sym[i].word == sym[j].word) {
                // two distinct positions carrying the same cyclic word: the
                // whole relator is a piece (proper powers land here)
                max_piece = std::max<int>(max_piece, static_cast<int>(sym[i].word.size()));
                continue;
            }
            max_piece = std::max(max_piece, common_prefix_length(sym[i].word, sym[j].word));
        }
    report.max_piece = max_piece;
    report.ratio = Rational(max_piece, report.min_relator);
    return report;
}

Word dehn_reduce(const Presentation& p, Word w, std::vector<DehnStep>* trace) {
    if (p.kind() != PresentationKind::SMALL_CANCELLATION) return free_reduce(std::move(w));
    auto sym = symmetrize(p.relators());
    w = free_reduce(std::move(w));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
            for (const auto& rel : sym) {
                const int rl = static_cast<int>(rel.word.size());
                const int half = rl / 2;
                // longest match of rel.word against w starting at pos
                int match = 0;
                while (pos + match < w.size() && match < rl && w[pos + match] == rel.word[match])
                    ++match;
                if (match <= half) continue;
                // w = u s v with s = rel.word[0..match); rel.word = s t
                // so u s v = (u rel u^-1) u t^-1 v
                Word u(w.begin(), w.begin() + pos);
                Word v(w.begin() + pos + match, w.end());
                Word t(rel.word.begin() + match, rel.word.end());
                if (trace) {
                    DehnStep step;
                    step.conjugator = word_mul(u, rel.conjugator);
                    step.relator_index = rel.relator_index;
                    step.sign = rel.sign;
                    trace->push_back(std::move(step));
                }
                w = word_mul(u, word_mul(word_inverse(t), v));
                changed = true;
                break;
            }
        }
    }
    return w;
}

Word normal_form(const Presentation& p, const Word& w) {
    if (p.kind() == PresentationKind::SMALL_CANCELLATION) return dehn_reduce(p, w);
    return free_reduce(w);
}

Word multiply(const Presentation& p, const Word& a, const Word& b) {
    return normal_form(p, word_mul(a, b));
}

bool is_identity(const Presentation& p, const Word& w) {
    return normal_form(p, w).empty();
}

bool equal_elements(const Presentation& p, const Word& a, const Word& b) {
    if (a == b) return true;
    if (p.kind() != PresentationKind::SMALL_CANCELLATION) return false;
    Word diff = word_mul(word_inverse(a), b);
    // Greendlinger: a nontrivial element of the normal closure contains more
    // than half a relator, so short differences are settled by free reduction
    if (2 * static_cast<int>(diff.size()) <= p.min_relator_length()) return diff.empty();
    return is_identity(p, diff);
}

std::optional<Vertex> CayleyBall::find(const Word& w) const {
    auto it = index.find(word_str(w));
    if (it != index.end()) return it->second;
    if (pres->kind() != PresentationKind::SMALL_CANCELLATION) return std::nullopt;
    // a different geodesic spelling may represent a known element
    if (2 * (radius + static_cast<int>(w.size())) <= pres->min_relator_length())
        return std::nullopt;
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        if (equal_elements(*pres, words[v], w)) return v;
    return std::nullopt;
}

CayleyBall cayley_ball(const Presentation& p, int radius, int vertex_cap) {
    if (radius < 1) throw PreconditionBroken("ball radius must be >= 1");

    std::vector<Word> words{Word{}};
    std::unordered_map<std::string, Vertex> index{{"", 0}};
    std::vector<int> layer_of{0};
    // whether two same-layer candidates can represent one element
    const bool need_group_dedup =
        p.kind() == PresentationKind::SMALL_CANCELLATION &&
        2 * radius > p.min_relator_length() / 2;

    auto find_known = [&](const Word& w) -> std::optional<Vertex> {
        auto it = index.find(word_str(w));
        if (it != index.end()) return it->second;
        if (!need_group_dedup) return std::nullopt;
        for (Vertex v = 0; v < static_cast<Vertex>(words.size()); ++v)
            if (equal_elements(p, words[v], w)) return v;
        return std::nullopt;
    };

    std::vector<Vertex> frontier{0};
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int layer = 0; layer < radius && !frontier.empty(); ++layer) {
        // collect candidates in shortlex order so the first representative
        // found for an element is the shortlex-least one
        std::vector<std::pair<Word, Vertex>> candidates;
        for (Vertex v : frontier) {
            for (int g = 1; g <= p.rank(); ++g) {
                for (int s : {1, -1}) {
                    Word next = normal_form(p, word_mul(words[v], Word{static_cast<Letter>(s * g)}));
                    candidates.push_back({std::move(next), v});
                }
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
        std::vector<Vertex> next_frontier;
        for (auto& [w, parent] : candidates) {
            auto known = find_known(w);
            if (known) {
                if (*known != parent) edges.push_back({parent, *known});
                continue;
            }
            if (static_cast<int>(words.size()) >= vertex_cap)
                throw BudgetExceeded("cayley ball vertex cap");
            Vertex id = static_cast<Vertex>(words.size());
            index[word_str(w)] = id;
            words.push_back(w);
            layer_of.push_back(layer + 1);
            edges.push_back({parent, id});
            next_frontier.push_back(id);
        }
        frontier = std::move(next_frontier);
    }

    // the last layer was never expanded, so edges inside it are still missing
    for (Vertex v : frontier) {
        for (int g = 1; g <= p.rank(); ++g)
            for (int s : {1, -1}) {
                Word image = normal_form(p, word_mul(words[v], Word{static_cast<Letter>(s * g)}));
                auto known = find_known(image);
                if (known && *known != v) edges.push_back({v, *known});
            }
    }

    // dedup edges (a and a^-1 steps both produce the pair)
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::string> labels;
    labels.reserve(words.size());
    for (const auto& w : words) labels.push_back(word_str(w));

    CayleyBall ball{radius, &p,
                    MetricGraph(static_cast<int>(words.size()), std::move(edges), std::move(labels)),
                    std::move(words), 0, std::move(index)};
    return ball;
}

std::optional<Vertex> act(const Presentation& p, const Word& g, const CayleyBall& ball, Vertex v) {
    ball.graph.check_vertex(v);
    Word image = normal_form(p, word_mul(g, ball.words[v]));
    return ball.find(image);
}

} // namespace coarsequot
