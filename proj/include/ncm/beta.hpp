#pragma once

#include <utility>
#include <vector>

#include "ncm/master.hpp"

namespace ncm {

// Words v(pi) with cycle counts, one per permutation pi of the row-major
// letter list of type k: the t-th letter of v(pi) is (row(t), row(pi(t))).
std::vector<std::pair<Word, long>> beta_words(const TypeVector& k, Guard guard = Guard());

// sum over types of total size <= max_degree of
//   (1 / prod_i k_i!) * sum_pi beta^{cyc(pi)} v(pi)
Series fz_sum(int m, int max_degree, int beta, Guard guard = Guard());

// det(I-A)^beta * fz_sum - 1 with the plain-sign determinant
Series beta_series(int m, int max_degree, int beta, Guard guard = Guard());

// Number of ways to cut every row block of a row-sorted word into beta
// consecutive, possibly empty pieces so that each of the beta interleaved
// piece words is balanced.
long count_beta_preimages(const Word& w, int m, int beta);

// The exponentiated master identity over ordinary commuting variables,
// decided by exact collapse.
VerificationReport verify_fz_commutative(int m, int max_degree, int beta,
                                         MembershipOptions opts = {});

// Its non-commutative extension: membership in the right-quantum ideal.  At
// beta = 1 the checked series coincides with the right-quantum master series,
// and the report carries the same verdicts.
VerificationReport verify_beta_noncommutative(int m, int max_degree, int beta,
                                              MembershipOptions opts = {});

}  // namespace ncm
