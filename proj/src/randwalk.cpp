#include "coarsequot/randwalk.hpp"

#include "coarsequot/slimness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace coarsequot {

namespace {

bool words_commute(const Word& a, const Word& b) {
    return word_mul(a, b) == word_mul(b, a);
}

// A cyclic-subgroup support with inverse pairs gives a recurrent walk on Z,
// so the drift concept degenerates. One-sided supports (point masses) keep a
// well-defined positive drift and stay allowed.
bool elementary_measure(const Measure& m) {
    std::vector<Word> nontrivial;
    for (const auto& [w, pr] : m.support)
        if (!w.empty()) nontrivial.push_back(w);
    if (nontrivial.empty()) return true;
    for (size_t i = 0; i < nontrivial.size(); ++i)
        for (size_t j = i + 1; j < nontrivial.size(); ++j)
            if (!words_commute(nontrivial[i], nontrivial[j])) return false;
    for (const auto& w : nontrivial) {
        Word inv = word_inverse(w);
        for (const auto& v : nontrivial)
            if (v == inv) return true;
    }
    return false;
}

} // namespace

void Measure::validate() const {
    if (support.empty()) throw PreconditionBroken("empty measure support");
    double total = 0;
    for (const auto& [w, pr] : support) {
        if (pr <= 0) throw PreconditionBroken("measure weights must be positive");
        total += pr;
    }
    if (std::abs(total - 1.0) > 1e-9) throw PreconditionBroken("measure weights must sum to 1");
    if (symmetric) {
        for (const auto& [w, pr] : support) {
            Word inv = word_inverse(w);
            bool found = false;
            for (const auto& [w2, pr2] : support)
                if (w2 == inv && std::abs(pr2 - pr) < 1e-12) found = true;
            if (!found) throw PreconditionBroken("measure marked symmetric but is not");
        }
    }
}

Measure Measure::uniform_generators(int rank) {
    Measure m;
    m.symmetric = true;
    const double pr = 1.0 / (2 * rank);
    for (int g = 1; g <= rank; ++g) {
        m.support.push_back({Word{static_cast<Letter>(g)}, pr});
        m.support.push_back({Word{static_cast<Letter>(-g)}, pr});
    }
    return m;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over the combined state
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

WalkSample sample_walk(const Presentation& p, const Measure& m, int n, std::uint64_t seed) {
    m.validate();
    WalkSample sample;
    sample.seed = seed;
    sample.prefix_endpoints.push_back({});
    std::mt19937_64 rng(seed);
    std::vector<double> cdf;
    double acc = 0;
    for (const auto& [w, pr] : m.support) {
        acc += pr;
        cdf.push_back(acc);
    }
    for (int step = 0; step < n; ++step) {
        // own inverse-CDF draw so reports do not depend on library internals
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        int idx = static_cast<int>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx >= static_cast<int>(cdf.size())) idx = static_cast<int>(cdf.size()) - 1;
        sample.increments.push_back(idx);
        sample.prefix_endpoints.push_back(
            multiply(p, sample.prefix_endpoints.back(), m.support[idx].first));
    }
    return sample;
}

DriftEstimate estimate_drift(const Presentation& p, const Measure& m, int n, int trials,
                             std::uint64_t seed) {
    if (trials < 2) throw InsufficientSamples("drift needs at least 2 trials");
    if (elementary_measure(m)) throw ElementaryMeasure();
    DriftEstimate est;
    est.trials = trials;
    est.length = n;
    std::vector<double> values(trials);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        auto walk = sample_walk(p, m, n, derived_seed(seed, t));
        values[t] = static_cast<double>(normal_form(p, walk.endpoint()).size()) / n;
    }
    double mean = 0;
    for (double v : values) mean += v;
    mean /= trials;
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= (trials - 1);
    est.mean = mean;
    est.stderr_of_mean = std::sqrt(var / trials);
    return est;
}

Rational translation_length(const Presentation& p, const Word& g, int k_max) {
    if (k_max < 2) throw PreconditionBroken("k_max must be >= 2");
    if (g.empty()) return Rational(0);
    if (p.kind() != PresentationKind::SMALL_CANCELLATION)
        return Rational(static_cast<long long>(cyclic_reduce(g).core.size()));
    Word power = normal_form(p, word_pow(g, k_max));
    return Rational(static_cast<long long>(power.size()), k_max);
}

QuasiAxis build_quasi_axis(const CayleyBall& ball, const Word& g, const Rational& delta,
                           int r_max) {
    auto tau = translation_length(*ball.pres, g, 2);
    if (!(tau > Rational(100) * delta)) throw TranslationTooSmall();

    QuasiAxis axis;
    axis.g = g;
    auto cf = cyclic_reduce(g);
    axis.base_point = cf.conjugator; // minimal displacement point for free groups

    auto segment_words = tree_geodesic_words(cf.conjugator, word_mul(g, cf.conjugator));
    for (const auto& w : segment_words) {
        auto v = ball.find(w);
        if (!v) {
            axis.truncated = true;
            continue;
        }
        axis.segment.push_back(*v);
    }

    std::vector<Vertex> span;
    for (int r = -r_max; r <= r_max; ++r) {
        Word shift = word_pow(g, r);
        for (const auto& w : segment_words) {
            auto v = ball.find(word_mul(shift, w));
            if (!v) {
                axis.truncated = true;
                continue;
            }
            span.push_back(*v);
        }
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    axis.span = std::move(span);
    if (!axis.span.empty()) {
        Subspace sub(ball.graph, axis.span);
        axis.measured_quasiconvexity =
            quasiconvexity_constant(ball.graph, sub, SamplingSpec::exhaustive(2000)).value;
    }
    return axis;
}

TreePath tree_geodesic_words(const Word& from, const Word& to) {
    Word diff = word_mul(word_inverse(from), to);
    TreePath path;
    path.reserve(diff.size() + 1);
    Word cur = from;
    path.push_back(cur);
    for (Letter l : diff) {
        if (!cur.empty() && cur.back() == -l)
            cur.pop_back();
        else
            cur.push_back(l);
        path.push_back(cur);
    }
    return path;
}

int tree_hausdorff(const std::vector<Word>& a, const std::vector<Word>& b) {
    auto one_side = [](const std::vector<Word>& from, const std::vector<Word>& to) {
        int worst = 0;
        for (const auto& u : from) {
            int best = -1;
            for (const auto& v : to) {
                int d = static_cast<int>(word_mul(word_inverse(u), v).size());
                if (best < 0 || d < best) best = d;
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_side(a, b), one_side(b, a));
}

namespace {

// edge labels of a tree path
Word path_labels(const TreePath& p) {
    Word labels;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Word step = word_mul(word_inverse(p[i]), p[i + 1]);
        labels.push_back(step.front());
    }
    return labels;
}

std::optional<MatchReport> build_free_report(const TreePath& p, const TreePath& q, bool reversed,
                                             int i_end, int j_end, int len, int a, int b) {
    // occurrence covers p vertices [i_end-len, i_end]; on q it covers scanned
    // positions [j_end-len, j_end], mapped back through the orientation
    const int np = static_cast<int>(p.size()) - 1;
    const int nq = static_cast<int>(q.size()) - 1;
    auto q_vertex = [&](int scanned) { return q[reversed ? nq - scanned : scanned]; };

    // each side extends by at most b, independently per path
    int p_l = std::min(b, i_end - len), p_r = std::min(b, np - i_end);
    int q_l = std::min(b, j_end - len), q_r = std::min(b, nq - j_end);

    MatchReport rep;
    for (int k = i_end - len - p_l; k <= i_end + p_r; ++k) rep.p_sub.push_back(p[k]);
    for (int k = j_end - len - q_l; k <= j_end + q_r; ++k) rep.q_sub.push_back(q_vertex(k));

    rep.g = word_mul(q_vertex(j_end - len), word_inverse(p[i_end - len]));
    std::vector<Word> translated;
    for (const auto& w : rep.p_sub) translated.push_back(word_mul(rep.g, w));
    rep.achieved_hausdorff = tree_hausdorff(translated, rep.q_sub);
    rep.achieved_diam = std::min(static_cast<int>(rep.p_sub.size()) - 1,
                                 static_cast<int>(rep.q_sub.size()) - 1);
    if (rep.achieved_diam < a || rep.achieved_hausdorff > b) return std::nullopt;
    return rep;
}

} // namespace

namespace {

void reduced_words_up_to(int rank, int radius, Word& current, std::vector<Word>& out) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == radius) return;
    for (int g = 1; g <= rank; ++g)
        for (int s : {1, -1}) {
            Letter l = static_cast<Letter>(s * g);
            if (!current.empty() && current.back() == -l) continue;
            current.push_back(l);
            reduced_words_up_to(rank, radius, current, out);
            current.pop_back();
        }
}

// matches of diameter <= 2b can have empty overlap (a bridge between the two
// subpaths), which the common-substring scan cannot see; enumerate those
// windows directly
std::optional<MatchReport> find_small_match(const TreePath& p, const TreePath& q, int a, int b,
                                            int conj_radius) {
    const int np = static_cast<int>(p.size()) - 1;
    const int nq = static_cast<int>(q.size()) - 1;
    int rank = 0;
    for (const auto& path : {p, q})
        for (const auto& w : path)
            for (Letter l : w) rank = std::max(rank, static_cast<int>(l > 0 ? l : -l));
    std::vector<Word> bridge_words;
    Word scratch;
    reduced_words_up_to(std::max(rank, 1), b, scratch, bridge_words);

    const int max_len = 2 * b + 1;
    for (int il = 0; il <= np; ++il) {
        // the image of the window start lands within b of some point of q',
        // so every viable conjugator has the form q[m] * e * p[il]^-1
        std::vector<Word> candidates;
        for (int m = 0; m <= nq; ++m)
            for (const auto& e : bridge_words) {
                Word g = word_mul(word_mul(q[m], e), word_inverse(p[il]));
                if (static_cast<int>(g.size()) > conj_radius) continue;
                if (std::find(candidates.begin(), candidates.end(), g) == candidates.end())
                    candidates.push_back(g);
            }
        for (const auto& g : candidates)
            for (int jl = 0; jl <= nq; ++jl)
                for (int lenp = a; lenp <= max_len && il + lenp <= np; ++lenp)
                    for (int lenq = a; lenq <= max_len && jl + lenq <= nq; ++lenq) {
                        MatchReport rep;
                        for (int k = il; k <= il + lenp; ++k) rep.p_sub.push_back(p[k]);
                        for (int k = jl; k <= jl + lenq; ++k) rep.q_sub.push_back(q[k]);
                        std::vector<Word> moved;
                        for (const auto& w : rep.p_sub) moved.push_back(word_mul(g, w));
                        int h = tree_hausdorff(moved, rep.q_sub);
                        if (h > b) continue;
                        rep.g = g;
                        rep.achieved_diam = std::min(lenp, lenq);
                        rep.achieved_hausdorff = h;
                        return rep;
                    }
    }
    return std::nullopt;
}

} // namespace

std::optional<MatchReport> find_match_free(const TreePath& p, const TreePath& q, int a, int b,
                                           int conj_radius) {
    if (a < 0 || b < 0) throw PreconditionBroken("match thresholds must be non-negative");
    Word lp = path_labels(p);
    const Word q_labels = path_labels(q);
    for (int orient = 0; orient < 2; ++orient) {
        bool reversed = orient == 1;
        Word lq = q_labels;
        if (reversed) {
            lq.clear();
            for (auto it = q_labels.rbegin(); it != q_labels.rend(); ++it)
                lq.push_back(static_cast<Letter>(-*it));
        }
        const int np = static_cast<int>(lp.size());
        const int nq = static_cast<int>(lq.size());
        std::vector<int> prev(nq + 1, 0), cur(nq + 1, 0);
        for (int i = 1; i <= np; ++i) {
            for (int j = 1; j <= nq; ++j) {
                if (lp[i - 1] != lq[j - 1]) {
                    cur[j] = 0;
                    continue;
                }
                cur[j] = prev[j - 1] + 1;
                const int len = cur[j];
                // a match extends the common segment by at most b each side
                int cap_p = len + std::min(b, i - len) + std::min(b, np - i);
                int cap_q = len + std::min(b, j - len) + std::min(b, nq - j);
                if (cap_p < a || cap_q < a) continue;
                int lq_start = reversed ? static_cast<int>(q.size()) - 1 - (j - len) : j - len;
                Word g = word_mul(q[lq_start], word_inverse(p[i - len]));
                if (static_cast<int>(g.size()) > conj_radius) continue;
                auto rep = build_free_report(p, q, reversed, i, j, len, a, b);
                if (rep) return rep;
            }
            std::swap(prev, cur);
        }
    }
    if (a <= 2 * b) return find_small_match(p, q, a, b, conj_radius);
    return std::nullopt;
}

std::optional<MatchReport> find_match(const CayleyBall& ball, const Path& p, const Path& q,
                                      int a, int b, int conj_radius, long long budget) {
    if (a < 0 || b < 0) throw PreconditionBroken("match thresholds must be non-negative");
    p.validate(ball.graph);
    q.validate(ball.graph);
    auto conj_ball = cayley_ball(*ball.pres, std::max(1, conj_radius));
    const int np = static_cast<int>(p.vertices.size());
    const int nq = static_cast<int>(q.vertices.size());

    auto apsp = all_pairs_distances(ball.graph);
    const int n = ball.graph.vertex_count();
    auto dist = [&](Vertex u, Vertex v) {
        return static_cast<int>(apsp[static_cast<size_t>(u) * n + v]);
    };

    long long work = 0;
    for (int i = 0; i < np; ++i)
        for (int i2 = i; i2 < np; ++i2) {
            if (dist(p.vertices[i], p.vertices[i2]) < a) continue;
            for (int j = 0; j < nq; ++j)
                for (int j2 = j; j2 < nq; ++j2) {
                    if (dist(q.vertices[j], q.vertices[j2]) < a) continue;
                    for (Vertex gv = 0; gv < conj_ball.graph.vertex_count(); ++gv) {
                        if (conj_radius == 0 && gv != conj_ball.origin) continue;
                        const Word& g = conj_ball.words[gv];
                        if (++work > budget) throw BudgetExceeded("match scan budget");
                        // translate p-window and measure Hausdorff in the ball
                        bool ok = true;
                        std::vector<Vertex> moved;
                        for (int k = i; k <= i2 && ok; ++k) {
                            auto img = act(*ball.pres, g, ball, p.vertices[k]);
                            if (!img)
                                ok = false;
                            else
                                moved.push_back(*img);
                        }
                        if (!ok) continue;
                        int h = 0;
                        for (Vertex u : moved) {
                            int best = -1;
                            for (int k = j; k <= j2; ++k) {
                                int d = dist(u, q.vertices[k]);
                                if (best < 0 || d < best) best = d;
                            }
                            h = std::max(h, best);
                        }
                        for (int k = j; k <= j2; ++k) {
                            int best = -1;
                            for (Vertex u : moved) {
                                int d = dist(u, q.vertices[k]);
                                if (best < 0 || d < best) best = d;
                            }
                            h = std::max(h, best);
                        }
                        if (h <= b) {
                            MatchReport rep;
                            for (int k = i; k <= i2; ++k)
                                rep.p_sub.push_back(ball.words[p.vertices[k]]);
                            for (int k = j; k <= j2; ++k)
                                rep.q_sub.push_back(ball.words[q.vertices[k]]);
                            rep.g = g;
                            rep.achieved_diam = std::min(dist(p.vertices[i], p.vertices[i2]),
                                                         dist(q.vertices[j], q.vertices[j2]));
                            rep.achieved_hausdorff = h;
                            return rep;
                        }
                    }
                }
        }
    return std::nullopt;
}

} // namespace coarsequot
