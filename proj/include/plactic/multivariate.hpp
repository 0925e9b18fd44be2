#pragma once

#include <string>

#include "plactic/multipoly.hpp"
#include "plactic/partition.hpp"
#include "plactic/qpoly.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

// Multivariate refinement of the rectangular-weight generating function:
// sum over Tab(lambda, (k^{rank+1})) of prod_i x_i^{d_i(t)}. Substituting
// x_i = q^i recovers the one-variable polynomial.
MultiPolynomial bold_kostka(const Partition& lambda, int k, int rank);
MultiPolynomial bold_kostka_serial(const Partition& lambda, int k, int rank);

struct Completion {
    Tableau u;    // minimal tableau with t.u Yamanouchi; itself Yamanouchi
    Partition nu; // weight of u; conjugate(nu) lists i with multiplicity d_i(t)
};

// The completing tableau of t of rectangular weight: the product of the
// columns c_i = i,(i-1),...,1, each taken d_i(t) times. The columns
// commute in the plactic monoid, so the order of the factors is
// immaterial.
Completion completion(const Tableau& t, int k);

// Alternate route to the same tableau: repeatedly append the column of
// the smallest colour whose raising operator still acts, until the
// product becomes Yamanouchi. Slower; kept as a cross-check on
// completion().
Tableau completion_by_search(const Tableau& t, int k);

// The partition (alpha_1+k, ..., alpha_r+k, k, ..., k, k-beta_s, ..., k-beta_1)
// of length rank+1 obtained by gluing alpha to the right of the k-column
// rectangle and cutting beta out of its lower-right corner.
Partition build_lambda(const Partition& alpha, const Partition& beta, int k, int rank);

// Schur polynomial as the content generating function over semistandard
// tableaux in the given number of variables.
MultiPolynomial schur_poly(const Partition& lambda, int nvars);

// Exponent-preserving involution between the rectangular-weight tableaux
// of shapes glued from (alpha, beta) and (beta, alpha). Requires
// k >= max(alpha_1, beta_1).
Tableau swap_involution(const Tableau& t, const Partition& alpha, const Partition& beta,
                        int k, int rank);

// x_i := q^i
QPolynomial specialize(const MultiPolynomial& p);

// Adding a full column r times to the shape while growing the rectangle
// accordingly does not change the polynomial.
bool stability_check(const Partition& lambda, int k, int r, int rank);

struct IdentityReport {
    bool ok = true;
    std::string counterexample;
};

// Standard-weight expansion, in cleared-denominator form: for every
// lambda of size rank+1,
//   bold_kostka(lambda, 1) =
//     sum_mu |Tab(lambda', mu)| sum_{I in S(mu)}
//       prod_{d in D(I)} x_d prod_{e not in D(I)} (1 - x_e)
// where S(mu) are the compositions rearranging mu and D(I) the partial
// sums of I short of the total.
IdentityReport standard_weight_identity(int rank);

} // namespace plactic
