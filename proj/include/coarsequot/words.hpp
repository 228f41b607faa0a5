#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coarsequot {

// Letters are signed generator indices: +k is the k-th generator (1-based),
// -k its inverse. Words are always kept freely reduced by the operations
// here. Text form uses a..z for generators and A..Z for inverses.
using Letter = std::int8_t;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word word_inverse(const Word& w);
Word word_mul(const Word& a, const Word& b); // freely reduced product
Word word_pow(const Word& w, int e);
Word word_conjugate(const Word& g, const Word& w); // g w g^-1

bool shortlex_less(const Word& a, const Word& b);

// Cyclic reduction: w = conjugator * core * conjugator^-1 with core
// cyclically reduced.
struct CyclicForm {
    Word core;
    Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

// Largest k with w = root^k (w cyclically reduced); returns the root.
Word primitive_root(const Word& cyclic_word);

int common_prefix_length(const Word& a, const Word& b);

std::string word_str(const Word& w);
Word parse_word(const std::string& text, int rank);

} // namespace coarsequot
