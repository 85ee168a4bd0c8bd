#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ncm {

// One generator a{rc} of the free algebra, read as the lattice step that
// starts at height `row` and ends at height `col` (both 1-based).
struct Letter {
    int row = 0;
    int col = 0;
    auto operator<=>(const Letter&) const = default;
};

// A word in the free algebra = a sequence of steps.  Words compare by
// (degree, starting-height word, ending-height word), which keeps map
// iteration graded and makes in-component ordering lexicographic on the
// (lambda, mu) pair.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    // "a13,a11" (single-digit indices) or "a(12,3)" beyond 9; "1" or "" is
    // the empty word.  Throws std::invalid_argument on malformed input.
    static Word parse(std::string_view text);

    size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& operator[](size_t t) const { return letters_[t]; }

    std::vector<int> row_word() const;  // lambda: starting heights
    std::vector<int> col_word() const;  // mu: ending heights
    std::vector<int> row_content(int m) const;
    std::vector<int> col_content(int m) const;
    bool balanced(int m) const;
    int max_index() const;  // largest height mentioned; 0 for the empty word

    Word concat(const Word& o) const;
    Word subword(size_t from, size_t count) const;
    Word with_adjacent_swapped(size_t t) const;  // swap letters t and t+1

    std::string str() const;  // "1" for the empty word

    std::strong_ordering operator<=>(const Word& o) const;
    bool operator==(const Word& o) const { return letters_ == o.letters_; }

private:
    std::vector<Letter> letters_;
};

// Inversion statistics of an index word (sequence of heights):
// pairs (s, t), s < t, with w[s] > w[t], 0-based positions.
std::vector<std::pair<size_t, size_t>> inversion_pairs(const std::vector<int>& w);
long inv(const std::vector<int>& w);

// All distinct arrangements of a multiset, in lexicographic order.
std::vector<std::vector<int>> multiset_arrangements(std::vector<int> values);

// Sorted index word realizing a content vector: (2,0,1) -> {1,1,3}.
std::vector<int> expand_content(const std::vector<int>& content);

// Grading key: (row content, column content).  Relation generators are
// homogeneous for it, so ideal membership splits along it.
struct Bigrading {
    std::vector<int> rows;
    std::vector<int> cols;
    auto operator<=>(const Bigrading&) const = default;
    std::string str() const;  // "(1,0,1|0,1,1)"
};

Bigrading bigrading_of(const Word& w, int m);

}  // namespace ncm
