#include "coarsequot/freetree.hpp"

#include <algorithm>
#include <deque>

#include "coarsequot/errors.hpp"

namespace coarsequot {

namespace {

// reduced word under a stream of appended letters
void push_letter(Word& w, Letter l) {
    if (!w.empty() && w.back() == -l)
        w.pop_back();
    else
        w.push_back(l);
}

} // namespace

FreeTreeGeometry::FreeTreeGeometry(int rank, Word core) : rank_(rank), core_(std::move(core)) {
    if (core_.empty()) throw PreconditionBroken("line period must be non-trivial");
    if (core_ != free_reduce(core_) ||
        (core_.size() > 1 && core_.front() == -core_.back()))
        throw PreconditionBroken("period word must be cyclically reduced");
    core_inv_ = word_inverse(core_);
}

Letter FreeTreeGeometry::dir_letter(const PeriodicDir& d, long long step) const {
    const int n = period();
    int idx = static_cast<int>((d.offset + step) % n);
    if (idx < 0) idx += n;
    return d.sign > 0 ? core_[idx] : core_inv_[idx];
}

Word FreeTreeGeometry::dir_word(const PeriodicDir& d) const {
    Word w(period());
    for (int i = 0; i < period(); ++i) w[i] = dir_letter(d, i);
    return w;
}

PeriodicDir FreeTreeGeometry::forward_shift(const PeriodicDir& d, long long steps) const {
    const int n = period();
    int off = static_cast<int>((d.offset + steps) % n);
    if (off < 0) off += n;
    return {d.sign, off};
}

PeriodicDir FreeTreeGeometry::backward_of(const PeriodicDir& d, long long steps) const {
    const int n = period();
    int off = static_cast<int>(((n - d.offset - steps) % n + n) % n);
    return {static_cast<std::int8_t>(-d.sign), off};
}

TreeLine FreeTreeGeometry::axis(const Word& g) const {
    return line_at(free_reduce(g), PeriodicDir{1, 0});
}

TreeLine FreeTreeGeometry::line_at(const Word& point, const PeriodicDir& fwd) const {
    // walk to the unique point of the line closest to the identity; the
    // length changes by exactly 1 per step, so it is unimodal along the line
    Word p = point;
    PeriodicDir f = fwd;
    PeriodicDir b = backward_of(fwd, 0);
    for (;;) {
        Letter lf = dir_letter(f, 0);
        if (!p.empty() && p.back() == -lf) {
            push_letter(p, lf);
            f = forward_shift(f, 1);
            b = backward_of(f, 0);
            continue;
        }
        Letter lb = dir_letter(b, 0);
        if (!p.empty() && p.back() == -lb) {
            push_letter(p, lb);
            b = forward_shift(b, 1);
            f = backward_of(b, 0);
            continue;
        }
        break;
    }
    TreeLine l;
    l.anchor = std::move(p);
    // canonical direction order: lexicographically smaller word first
    Word wf = dir_word(f), wb = dir_word(b);
    if (std::lexicographical_compare(wb.begin(), wb.end(), wf.begin(), wf.end())) {
        l.dir_a = b;
        l.dir_b = f;
    } else {
        l.dir_a = f;
        l.dir_b = b;
    }
    return l;
}

TreeLine FreeTreeGeometry::translate(const Word& n, const TreeLine& l) const {
    return line_at(word_mul(n, l.anchor), l.dir_a);
}

FreeTreeGeometry::Projection FreeTreeGeometry::project(const TreeLine& l, const Word& x) const {
    std::deque<Letter> z; // reduced word point^-1 * x, |z| = distance to x
    {
        Word z0 = word_mul(word_inverse(l.anchor), x);
        z.assign(z0.begin(), z0.end());
    }
    auto decreasing = [&](Letter first) { return !z.empty() && z.front() == first; };
    auto step_with = [&](Letter letter) {
        if (!z.empty() && z.front() == letter)
            z.pop_front();
        else
            z.push_front(static_cast<Letter>(-letter));
    };

    Projection result;
    if (decreasing(dir_letter(l.dir_a, 0))) {
        long long k = 0;
        while (decreasing(dir_letter(l.dir_a, k))) {
            step_with(dir_letter(l.dir_a, k));
            ++k;
        }
        result.offset = k;
    } else if (decreasing(dir_letter(l.dir_b, 0))) {
        long long k = 0;
        while (decreasing(dir_letter(l.dir_b, k))) {
            step_with(dir_letter(l.dir_b, k));
            ++k;
        }
        result.offset = -k;
    }
    result.dist = static_cast<int>(z.size());
    return result;
}

Word FreeTreeGeometry::point_at(const TreeLine& l, long long offset) const {
    Word p = l.anchor;
    const PeriodicDir& d = offset >= 0 ? l.dir_a : l.dir_b;
    long long steps = offset >= 0 ? offset : -offset;
    for (long long k = 0; k < steps; ++k) push_letter(p, dir_letter(d, k));
    return p;
}

std::vector<std::pair<Word, long long>> FreeTreeGeometry::segment_within(const TreeLine& l,
                                                                         int radius) const {
    std::vector<std::pair<Word, long long>> out;
    if (static_cast<int>(l.anchor.size()) > radius) return out;
    // |point| is unimodal along the line with its minimum at the anchor
    Word p = l.anchor;
    long long k = 0;
    for (;;) {
        out.push_back({p, k});
        Letter next = dir_letter(l.dir_a, k);
        int next_len = static_cast<int>(p.size()) + (!p.empty() && p.back() == -next ? -1 : 1);
        if (next_len > radius) break;
        push_letter(p, next);
        ++k;
    }
    p = l.anchor;
    k = 0;
    for (;;) {
        Letter next = dir_letter(l.dir_b, k);
        int next_len = static_cast<int>(p.size()) + (!p.empty() && p.back() == -next ? -1 : 1);
        if (next_len > radius) break;
        push_letter(p, next);
        ++k;
        out.push_back({p, -k});
    }
    return out;
}

int FreeTreeGeometry::proj_distance(const TreeLine& l, const Word& x, const Word& y) const {
    auto px = project(l, x);
    auto py = project(l, y);
    long long d = px.offset - py.offset;
    return static_cast<int>(d < 0 ? -d : d);
}

std::string FreeTreeGeometry::key(const TreeLine& l) const {
    std::string s = word_str(l.anchor);
    s.push_back('|');
    s += word_str(dir_word(l.dir_a));
    s.push_back('|');
    s += word_str(dir_word(l.dir_b));
    return s;
}

} // namespace coarsequot
