#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ncm/lattice.hpp"

using namespace ncm;

namespace {

// all types of the given length with entries summing to at most `cap`
std::vector<TypeVector> small_types(int m, int cap) {
    std::vector<TypeVector> out;
    TypeVector acc;
    auto rec = [&](auto&& self, int left) -> void {
        if (static_cast<int>(acc.size()) == m) {
            out.push_back(acc);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            acc.push_back(k);
            self(self, left - k);
            acc.pop_back();
        }
    };
    rec(rec, cap);
    return out;
}

std::multiset<Letter> letter_multiset(const Word& w) {
    return {w.letters().begin(), w.letters().end()};
}

long max_rank(const TypeVector& k) {
    // fully reversed row word: every cross pair inverted
    long r = 0;
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = i + 1; j < k.size(); ++j) r += static_cast<long>(k[i]) * k[j];
    return r;
}

}  // namespace

TEST_CASE("classification of the basic word shapes") {
    Classification c = classify(Word::parse("a12,a11,a21"), 2);
    CHECK(c.balanced);
    CHECK(c.o_sequence);
    CHECK_FALSE(c.p_sequence);
    CHECK(c.rank == 0);
    CHECK(c.type == TypeVector{2, 1});

    // two closed paths may share a base height: (a11)(a12,a21) is a p-sequence
    Classification both = classify(Word::parse("a11,a12,a21"), 2);
    CHECK(both.o_sequence);
    CHECK(both.p_sequence);

    Classification p = classify(Word::parse("a12,a21,a11"), 2);
    CHECK(p.p_sequence);
    CHECK(p.q_sequence);
    CHECK_FALSE(p.o_sequence);
    CHECK(p.rank == 1);

    CHECK_FALSE(classify(Word::parse("a12"), 2).balanced);
    CHECK(classify(Word::parse("1"), 2).o_sequence);
    CHECK(classify(Word::parse("1"), 2).p_sequence);

    // balanced but neither o nor p nor a chain state
    Classification odd = classify(Word::parse("a22,a12,a21,a11"), 2);
    CHECK(odd.balanced);
    CHECK_FALSE(odd.o_sequence);
    CHECK_FALSE(odd.p_sequence);
}

TEST_CASE("the three o-sequences of type (2,1) and their sorted images") {
    auto os = enumerate_sequences(SequenceKind::OSequence, {2, 1}, 2);
    REQUIRE(os.size() == 3);
    CHECK(os[0] == Word::parse("a11,a11,a22"));
    CHECK(os[1] == Word::parse("a11,a12,a21"));
    CHECK(os[2] == Word::parse("a12,a11,a21"));

    PhiResult r = phi(Word::parse("a12,a11,a21"), 2);
    CHECK(r.p_sequence == Word::parse("a12,a21,a11"));
    CHECK(r.switches == 1);
    CHECK(phi_inverse(r.p_sequence, 2) == Word::parse("a12,a11,a21"));

    // already a p-sequence: zero switches
    CHECK(phi(Word::parse("a11,a11,a22"), 2).switches == 0);
}

TEST_CASE("phi sorts the pinned type (4,7,8) o-sequence in 33 switches") {
    Word o = Word::parse(
        "a13,a11,a12,a13,a22,a23,a22,a21,a23,a22,a23,a32,a31,a31,a33,a32,a32,a33,a33");
    Word p = Word::parse(
        "a13,a32,a22,a23,a31,a11,a12,a22,a21,a13,a31,a23,a33,a32,a22,a23,a32,a33,a33");
    PhiResult r = phi(o, 3);
    CHECK(r.switches == 33);
    CHECK(r.p_sequence == p);
    CHECK(classify(p, 3).rank == 33);
    CHECK(phi_inverse(p, 3) == o);
}

TEST_CASE("psi raises the rank by exactly one and is reached step by step") {
    Word o = Word::parse("a12,a11,a21");
    Word w = o;
    long rank = 0;
    while (!classify(w, 2).p_sequence) {
        Word next = psi_step(w, 2);
        CHECK(classify(next, 2).rank == rank + 1);
        CHECK(letter_multiset(next) == letter_multiset(w));
        w = next;
        ++rank;
    }
    CHECK(psi_step(w, 2) == w);  // identity on p-sequences
    CHECK_THROWS_AS(psi_step(Word::parse("a22,a12,a21,a11"), 2), std::invalid_argument);
}

TEST_CASE("phi is a letter-preserving bijection onto the p-sequences") {
    for (int m = 1; m <= 3; ++m) {
        int cap = m == 3 ? 4 : 5;
        for (const TypeVector& k : small_types(m, cap)) {
            auto os = enumerate_sequences(SequenceKind::OSequence, k, m);
            auto ps = enumerate_sequences(SequenceKind::PSequence, k, m);
            REQUIRE(os.size() == ps.size());
            std::set<Word> images;
            for (const Word& o : os) {
                PhiResult r = phi(o, m);
                CHECK(classify(r.p_sequence, m).p_sequence);
                CHECK(letter_multiset(r.p_sequence) == letter_multiset(o));
                CHECK(r.switches == classify(r.p_sequence, m).rank);
                CHECK(phi_inverse(r.p_sequence, m) == o);
                images.insert(r.p_sequence);
            }
            CHECK(images == std::set<Word>(ps.begin(), ps.end()));
        }
    }
}

TEST_CASE("every chain-state slice has the o-sequence cardinality and psi maps slice to slice") {
    for (int m = 2; m <= 3; ++m) {
        for (const TypeVector& k : small_types(m, 4)) {
            auto os = enumerate_sequences(SequenceKind::OSequence, k, m);
            long top = max_rank(k);
            std::vector<Word> prev;
            for (long n = 0; n <= top + 1; ++n) {
                auto slice = enumerate_sequences(SequenceKind::QSequence, k, m, n);
                CHECK(slice.size() == os.size());
                if (n == 0) CHECK(slice == os);
                if (n == top + 1) {
                    auto ps = enumerate_sequences(SequenceKind::PSequence, k, m);
                    CHECK(std::set<Word>(slice.begin(), slice.end()) ==
                          std::set<Word>(ps.begin(), ps.end()));
                }
                if (n > 0) {
                    std::set<Word> pushed;
                    for (const Word& w : prev) pushed.insert(psi_step(w, m));
                    CHECK(pushed == std::set<Word>(slice.begin(), slice.end()));
                }
                prev = slice;
            }
        }
    }
}

TEST_CASE("balanced enumeration covers all arrangements") {
    auto balanced = enumerate_sequences(SequenceKind::Balanced, {1, 1}, 2);
    REQUIRE(balanced.size() == 4);
    CHECK(balanced[0] == Word::parse("a11,a22"));
    CHECK(balanced[3] == Word::parse("a22,a11"));
    // guard honors tiny budgets
    CHECK_THROWS_AS(
        enumerate_sequences(SequenceKind::Balanced, {2, 2, 2}, 3, 0, Guard(5)),
        guard_error);
}

TEST_CASE("primitive closed paths and the inversion drop") {
    Word p = Word::parse("a13,a32,a24,a43,a31,a11,a22,a34,a44,a43");
    auto parts = primitive_parts(p, 4);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == Word::parse("a13,a32,a24,a43,a31"));
    CHECK(parts[1] == Word::parse("a11"));
    CHECK(parts[2] == Word::parse("a22"));
    CHECK(parts[3] == Word::parse("a34,a44,a43"));
    CHECK(inv(p.col_word()) - inv(p.row_word()) == 6);
    CHECK(static_cast<long>(p.degree()) - 4 == 6);

    // a primitive part of length l drops the inversion count by exactly l - 1
    for (const Word& part : parts) {
        CHECK(inv(part.col_word()) - inv(part.row_word()) ==
              static_cast<long>(part.degree()) - 1);
    }

    CHECK(primitive_parts(Word::parse("a11,a12,a21"), 2).size() == 2);
    CHECK_THROWS_AS(primitive_parts(Word::parse("a12,a11,a21"), 2),
                    std::invalid_argument);
}

TEST_CASE("regrouping by row extends the inverse sorting map to balanced words") {
    Word w = Word::parse("a22,a11");
    CHECK(regroup_by_row(w, 2) == Word::parse("a11,a22"));
    Word v = Word::parse("a21,a12");
    CHECK(regroup_by_row(v, 2) == Word::parse("a12,a21"));
    // stable: same-row letters keep their order
    Word u = Word::parse("a22,a12,a11,a21");
    CHECK(regroup_by_row(u, 2) == Word::parse("a12,a11,a22,a21"));
    CHECK(classify(regroup_by_row(u, 2), 2).o_sequence);
}
