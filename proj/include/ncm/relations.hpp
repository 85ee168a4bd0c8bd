#pragma once

#include <utility>
#include <vector>

#include "ncm/guard.hpp"
#include "ncm/matrix_class.hpp"
#include "ncm/series.hpp"

namespace ncm {

// A quadratic relation generator.  Every term shares one bigrading, which is
// what lets membership checks split into finite components.
struct Relator {
    Series element;     // degree-2 words only
    Bigrading grading;
};

// The defining relations of a matrix class at size m, exactly as displayed in
// the source identities (one orientation per unordered instance).
std::vector<Relator> relation_generators(const MatrixClass& cls, int m);

// Canonical form of a word under a monomial-rewrite class: letters stably
// sorted by starting height (fully sorted for the commutative class), with
// the accumulated exchange weight, so that  word = weight * sorted  modulo
// the ideal.  Throws for right-quantum classes.
std::pair<Coefficient, Word> monomial_normal_form(const Word& w, const MatrixClass& cls);

// Apply monomial_normal_form to every term and re-collect.
Series normal_form(const Series& s, const MatrixClass& cls);

struct ComponentVerdict {
    Bigrading grading;
    long basis_size = 0;      // all words of the bigrading
    long span_rank = 0;       // largest relator-span rank seen across points
    bool member = false;
    long residual_terms = 0;  // nonzero entries left at the first failing point
    double elapsed_ms = 0.0;
};

struct MembershipResult {
    bool member = false;
    std::vector<ComponentVerdict> components;
};

struct MembershipOptions {
    int q_points = 3;        // instantiation rounds over the rotated pool
    bool symbolic = false;   // decide over fractions of Laurent polynomials instead
    long component_basis_limit = 5000;
    Guard guard{};
};

// Decide whether s lies in the two-sided ideal generated by the class
// relations, component by component.  Parametric coefficients are decided by
// exact instantiation at every rotated test point (or symbolically); the
// spanning set embeds every generator between all compatible word pairs.
MembershipResult ideal_membership(const Series& s, const MatrixClass& cls, int m,
                                  MembershipOptions opts = {});

MembershipResult ideal_membership(const Series& s, const MatrixClass& cls, int m,
                                  const std::vector<ParamAssignment>& points,
                                  MembershipOptions opts = {});

}  // namespace ncm
