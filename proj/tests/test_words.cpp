#include "doctest.h"

#include "coarsequot/words.hpp"
#include "coarsequot/errors.hpp"

using namespace coarsequot;

TEST_CASE("free reduction and inverse") {
    auto w = parse_word("abB", 2);
    CHECK(word_str(w) == "a");
    CHECK(word_str(word_mul(parse_word("ab", 2), parse_word("Ba", 2))) == "aa");
    CHECK(word_str(word_inverse(parse_word("abA", 2))) == "aBA");
    CHECK(word_mul(parse_word("a", 2), parse_word("A", 2)).empty());
    CHECK(parse_word("1", 2).empty());
    CHECK_THROWS_AS(parse_word("xyz", 2), ParseError);
}

TEST_CASE("powers and conjugates") {
    auto a = parse_word("ab", 2);
    CHECK(word_str(word_pow(a, 3)) == "ababab");
    CHECK(word_str(word_pow(a, -2)) == "BABA");
    CHECK(word_pow(a, 0).empty());
    CHECK(word_str(word_conjugate(parse_word("a", 2), parse_word("b", 2))) == "abA");
}

TEST_CASE("shortlex order") {
    CHECK(shortlex_less(parse_word("a", 2), parse_word("A", 2)));
    CHECK(shortlex_less(parse_word("A", 2), parse_word("b", 2)));
    CHECK(shortlex_less(parse_word("b", 2), parse_word("aa", 2)));
    CHECK_FALSE(shortlex_less(parse_word("ab", 2), parse_word("ab", 2)));
}

TEST_CASE("cyclic reduction") {
    auto cf = cyclic_reduce(parse_word("abA", 2));
    CHECK(word_str(cf.core) == "b");
    CHECK(word_str(cf.conjugator) == "a");
    CHECK(word_str(word_mul(word_mul(cf.conjugator, cf.core), word_inverse(cf.conjugator))) ==
          "abA");
    auto cf2 = cyclic_reduce(parse_word("baabAB", 2));
    CHECK(word_str(cf2.core) == "ab");
    CHECK(word_str(cf2.conjugator) == "ba");
    auto cf3 = cyclic_reduce(parse_word("ab", 2));
    CHECK(word_str(cf3.core) == "ab");
    CHECK(cf3.conjugator.empty());
}

TEST_CASE("primitive root") {
    CHECK(word_str(primitive_root(parse_word("ababab", 2))) == "ab");
    CHECK(word_str(primitive_root(parse_word("aba", 2))) == "aba");
    CHECK(word_str(primitive_root(parse_word("aa", 2))) == "a");
}
