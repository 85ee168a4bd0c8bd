#include "doctest.h"

#include <stdexcept>

#include "ncm/word.hpp"

using namespace ncm;

TEST_CASE("word parsing accepts both letter spellings") {
    Word w = Word::parse("a13,a11");
    REQUIRE(w.degree() == 2);
    CHECK(w[0] == Letter{1, 3});
    CHECK(w[1] == Letter{1, 1});
    CHECK(w.str() == "a13,a11");

    Word big = Word::parse("a(12,3),a(2,13)");
    CHECK(big[0] == Letter{12, 3});
    CHECK(big[1] == Letter{2, 13});
    CHECK(big.str() == "a(12,3),a(2,13)");
    CHECK(Word::parse(big.str()) == big);

    CHECK(Word::parse("1").empty());
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("1").str() == "1");

    CHECK_THROWS_AS(Word::parse("a1"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a123"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("b12"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a12,,a21"), std::invalid_argument);
}

TEST_CASE("words order by degree, then starting heights, then ending heights") {
    Word e = Word::parse("1");
    Word a11 = Word::parse("a11");
    Word a12 = Word::parse("a12");
    Word ab = Word::parse("a11,a22");
    Word ba = Word::parse("a12,a21");
    CHECK(e < a11);
    CHECK(a11 < a12);       // same row words, column word decides
    CHECK(a12 < ab);        // degree decides
    CHECK(ab < ba);         // row words both (1,2); columns (1,2) < (2,1)
    CHECK(ba < Word::parse("a21,a12"));  // row word (1,2) < (2,1)
}

TEST_CASE("row and column structure of a word") {
    Word w = Word::parse("a13,a22,a31");
    CHECK(w.row_word() == std::vector<int>{1, 2, 3});
    CHECK(w.col_word() == std::vector<int>{3, 2, 1});
    CHECK(w.row_content(3) == std::vector<int>{1, 1, 1});
    CHECK(w.col_content(3) == std::vector<int>{1, 1, 1});
    CHECK(w.balanced(3));
    CHECK(w.max_index() == 3);

    Word u = Word::parse("a12,a13");
    CHECK_FALSE(u.balanced(3));
    CHECK(u.row_content(3) == std::vector<int>{2, 0, 0});
    CHECK(u.col_content(3) == std::vector<int>{0, 1, 1});

    CHECK(Word::parse("1").balanced(2));
    CHECK(Word::parse("1").max_index() == 0);
}

TEST_CASE("concatenation, subwords and adjacent swaps") {
    Word w = Word::parse("a11,a12,a21");
    CHECK(Word::parse("a11").concat(Word::parse("a12,a21")) == w);
    CHECK(w.subword(1, 2) == Word::parse("a12,a21"));
    CHECK(w.subword(0, 0).empty());
    CHECK(w.with_adjacent_swapped(0) == Word::parse("a12,a11,a21"));
    CHECK(w.with_adjacent_swapped(1) == Word::parse("a11,a21,a12"));
}

TEST_CASE("inversion statistics match the pinned index words") {
    CHECK(inv({1, 3, 2, 4, 3, 1, 2, 3, 4, 4}) == 10);
    CHECK(inv({3, 2, 4, 3, 1, 1, 2, 4, 4, 3}) == 16);
    CHECK(inv({}) == 0);
    CHECK(inv({1, 2, 3}) == 0);
    CHECK(inv({3, 2, 1}) == 3);

    auto pairs = inversion_pairs({2, 1, 2, 1});
    // (0,1), (0,3), (2,3) in 0-based positions
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == std::pair<size_t, size_t>{0, 1});
    CHECK(pairs[1] == std::pair<size_t, size_t>{0, 3});
    CHECK(pairs[2] == std::pair<size_t, size_t>{2, 3});
}

TEST_CASE("multiset arrangements and content expansion") {
    auto arr = multiset_arrangements({1, 1, 3});
    REQUIRE(arr.size() == 3);
    CHECK(arr[0] == std::vector<int>{1, 1, 3});
    CHECK(arr[1] == std::vector<int>{1, 3, 1});
    CHECK(arr[2] == std::vector<int>{3, 1, 1});

    CHECK(multiset_arrangements({}).size() == 1);  // the empty arrangement
    CHECK(multiset_arrangements({2, 2}).size() == 1);
    CHECK(multiset_arrangements({3, 1, 2}).size() == 6);

    CHECK(expand_content({2, 0, 1}) == std::vector<int>{1, 1, 3});
    CHECK(expand_content({}).empty());
    CHECK_THROWS_AS(expand_content({1, -1}), std::invalid_argument);
}

TEST_CASE("bigrading keys split words by row and column content") {
    Word w = Word::parse("a11,a13,a31");
    Bigrading g = bigrading_of(w, 3);
    CHECK(g.rows == std::vector<int>{2, 0, 1});
    CHECK(g.cols == std::vector<int>{2, 0, 1});
    CHECK(g.str() == "(2,0,1|2,0,1)");

    Bigrading h = bigrading_of(Word::parse("a12,a21"), 2);
    CHECK(h.str() == "(1,1|1,1)");
    CHECK(h == bigrading_of(Word::parse("a11,a22"), 2));
    CHECK_FALSE(h == bigrading_of(Word::parse("a11,a21"), 2));
    CHECK(bigrading_of(Word::parse("1"), 2).str() == "(0,0|0,0)");
}
