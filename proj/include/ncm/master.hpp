#pragma once

#include "ncm/determinants.hpp"
#include "ncm/lattice.hpp"
#include "ncm/matrix_class.hpp"
#include "ncm/relations.hpp"
#include "ncm/report.hpp"
#include "ncm/series.hpp"

namespace ncm {

// G(k): the sum over o-sequences of row type k, each weighted by the class's
// straight q-symbols along its column-word inversions.
Series boson_term(const MatrixClass& cls, int m, const TypeVector& k, int max_degree,
                  Guard guard = Guard());

// Sum of boson_term over every type of total size <= max_degree (the empty
// type contributes 1).
Series boson_sum(const MatrixClass& cls, int m, int max_degree, Guard guard = Guard());

// det(I-A) * boson_sum - 1: the series the master identity places in the
// class ideal.
Series master_series(const MatrixClass& cls, int m, int max_degree, Guard guard = Guard());

// det(I-A) * (closed-walk expansion at height 1 of the scaled entries)
// - det(I-A^{11}): the series behind the top-left quasideterminant identity.
Series quasidet_series(const MatrixClass& cls, int m, int max_degree);

// q-symbol transport into a parametric class: a word picks up straight
// symbols along its column-word inversions and inverse symbols along its
// row-word inversions.  The identity map for symbol-free classes.
Series transport(const Series& s, const MatrixClass& cls);

// Multiply the coefficient of one word (which must be present) by a rational
// factor; mutated series serve as negative controls for membership verdicts.
Series with_scaled_coefficient(const Series& s, const Word& w, const Rational& factor);

// The master identity at truncation max_degree: exact collapse for the
// commutative class, ideal membership for everything else.
VerificationReport verify_master(const MatrixClass& cls, int m, int max_degree,
                                 MembershipOptions opts = {});

// The quasideterminant identity at truncation max_degree.  Rejects the super
// class, which has no scaled-entry walk expansion.
VerificationReport verify_quasidet(const MatrixClass& cls, int m, int max_degree,
                                   MembershipOptions opts = {});

// Determinant row/column lemmas as a report (plain-sign classes only).
VerificationReport verify_detlemmas(const MatrixClass& cls, int m,
                                    MembershipOptions opts = {});

}  // namespace ncm
