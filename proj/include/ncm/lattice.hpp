#pragma once

#include <vector>

#include "ncm/guard.hpp"
#include "ncm/word.hpp"

namespace ncm {

using TypeVector = std::vector<int>;

// Word taxonomy used by the sorting bijection.
//
//   balanced     row content equals column content
//   o-sequence   balanced with non-decreasing starting heights (rank 0)
//   p-sequence   concatenation of closed lattice paths: a path 1 -> 1 inside
//                [1, m], then 2 -> 2 inside [2, m], and so on (empty segments
//                allowed)
//   q-sequence   any word that the o->p sorting process can pass through:
//                a maximal p-parseable prefix, then the remaining letters in
//                non-decreasing row order except that the first tail letter
//                starting at the prefix's end height may have drifted left
//
// rank is inv of the row word; each switch of the sorting process raises it
// by exactly one.
struct Classification {
    bool balanced = false;
    bool o_sequence = false;
    bool p_sequence = false;
    bool q_sequence = false;
    long rank = 0;
    TypeVector type;  // row content when balanced, else empty
};

Classification classify(const Word& w, int m);

// One adjacent switch of the sorting process: the first tail letter starting
// at the prefix-end height moves one position left (identity on p-sequences).
// Throws std::invalid_argument unless w is a q-sequence.
Word psi_step(const Word& w, int m);

struct PhiResult {
    Word p_sequence;
    long switches = 0;
};

// Iterate psi_step from an o-sequence to its p-sequence fixed point.
PhiResult phi(const Word& o_sequence, int m);

// Inverse direction: stable-sort the letters by starting height.  Requires a
// p-sequence; the extension to arbitrary balanced words is regroup_by_row.
Word phi_inverse(const Word& p_sequence, int m);
Word regroup_by_row(const Word& balanced, int m);

enum class SequenceKind { Balanced, OSequence, PSequence, QSequence };

// All sequences of the given kind and type, in word order.  For QSequence the
// result is the chain set of the given rank: q-sequences of rank `rank`
// together with p-sequences of smaller rank (so every rank slice has the same
// cardinality as the o-sequence set).
std::vector<Word> enumerate_sequences(SequenceKind kind, const TypeVector& type, int m,
                                      long rank = 0, Guard guard = Guard());

// Split a p-sequence into primitive closed paths (paths that return to their
// starting height exactly once, at the very last step).
std::vector<Word> primitive_parts(const Word& p_sequence, int m);

}  // namespace ncm
