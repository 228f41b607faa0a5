#include "coarsequot/words.hpp"

#include <algorithm>

#include "coarsequot/errors.hpp"

namespace coarsequot {

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) l = -l;
    return out;
}

Word word_mul(const Word& a, const Word& b) {
    Word out = a;
    for (Letter l : b) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word word_pow(const Word& w, int e) {
    Word base = e < 0 ? word_inverse(w) : w;
    int reps = e < 0 ? -e : e;
    Word out;
    for (int i = 0; i < reps; ++i) out = word_mul(out, base);
    return out;
}

Word word_conjugate(const Word& g, const Word& w) {
    return word_mul(word_mul(g, w), word_inverse(g));
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto rank = [](Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; };
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return rank(a[i]) < rank(b[i]);
    }
    return false;
}

CyclicForm cyclic_reduce(const Word& w) {
    CyclicForm cf;
    Word core = free_reduce(w);
    Word conj;
    while (core.size() >= 2 && core.front() == -core.back()) {
        conj.push_back(core.front());
        core.erase(core.begin());
        core.pop_back();
    }
    cf.core = std::move(core);
    cf.conjugator = std::move(conj);
    return cf;
}

Word primitive_root(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int period = 1; period <= n / 2; ++period) {
        if (n % period != 0) continue;
        bool ok = true;
        for (int i = period; i < n && ok; ++i) ok = (w[i] == w[i - period]);
        if (ok) return Word(w.begin(), w.begin() + period);
    }
    return w;
}

int common_prefix_length(const Word& a, const Word& b) {
    size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
}

std::string word_str(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(l > 0 ? static_cast<char>('a' + l - 1)
                                         : static_cast<char>('A' - l - 1));
    return s;
}

Word parse_word(const std::string& text, int rank) {
    Word w;
    for (char c : text) {
        if (c == ' ' || c == '1') continue;
        Letter l;
        if (c >= 'a' && c <= 'z')
            l = static_cast<Letter>(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            l = static_cast<Letter>(-(c - 'A' + 1));
        else
            throw ParseError(std::string("bad letter '") + c + "'");
        if (l > rank || -l > rank) throw ParseError("letter outside presentation rank");
        w.push_back(l);
    }
    return free_reduce(w);
}

} // namespace coarsequot
