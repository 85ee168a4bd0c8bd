#pragma once

#include <string>
#include <vector>

#include "ncm/matrix_class.hpp"
#include "ncm/relations.hpp"
#include "ncm/series.hpp"

namespace ncm {

// Permutation weight family for the non-commutative determinant.
enum class DetFlavor { Plain, Quantum, Qij, Super };

DetFlavor det_flavor(const MatrixClass& cls);

// Matrix of truncated series, carrying the original row/column indices so
// minors keep the parameters and parities of the entries they came from.
struct SymbolicMatrix {
    int max_degree = 0;
    std::vector<int> row_labels;
    std::vector<int> col_labels;
    std::vector<std::vector<Series>> entries;  // entries[row][col]

    // the generator matrix (a_ij) for 1 <= i,j <= m
    static SymbolicMatrix letters(int m, int max_degree);

    size_t size() const { return row_labels.size(); }
    SymbolicMatrix identity_minus() const;
    SymbolicMatrix minor_at(size_t row_pos, size_t col_pos) const;
    SymbolicMatrix with_columns_swapped(size_t c1, size_t c2) const;
    SymbolicMatrix with_column_replaced(size_t target, size_t source) const;
};

// Column-ordered Leibniz expansion sum_sigma w(sigma) b_{sigma(1),1} ...
// b_{sigma(n),n}.  The weight of an inversion is written in the original row
// labels; gamma supplies the parities for the Super flavor (indexed by
// original label).
Series determinant(const SymbolicMatrix& b, DetFlavor flavor,
                   const std::vector<int>& gamma = {});

// Entry matrix used by the path expansion of the top-left quasideterminant:
// every row after the first is scaled by the class's q-symbol against
// height 1.  Classes with plain weights return the letters unchanged.
SymbolicMatrix scaled_letters(int m, int max_degree, const MatrixClass& cls);

// Row operations that make the plain-sign determinant behave like one modulo
// the class ideal: adjacent column swaps negate it, equal columns kill it,
// and the last-column expansion reproduces it.  Checked for both A and I-A.
struct DetLemmaCase {
    std::string name;
    bool pass = false;
    MembershipResult membership;
};

std::vector<DetLemmaCase> verify_det_lemmas(const MatrixClass& cls, int m,
                                            MembershipOptions opts = {});

}  // namespace ncm
