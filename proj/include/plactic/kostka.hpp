#pragma once

#include <vector>

#include "plactic/partition.hpp"
#include "plactic/qpoly.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

// q-analogue of the partition function for the type-A root system of the
// given rank: the coefficient of q^m counts decompositions of v into m
// positive roots e_i - e_j (with multiplicity). Zero polynomial when no
// decomposition exists.
QPolynomial q_kostant(const std::vector<int>& v, int rank);

// Alternating sum over the symmetric group:
//   K(q) = sum_w (-1)^l(w) P_q((lambda+rho)w - mu - rho)
// with rho = (rank, rank-1, ..., 0) and w acting by coordinate
// permutation ((lambda+rho)w)_k = (lambda+rho)_{w(k)}. This is the one
// index convention for which K_{lambda,lambda} = 1; the tests pin it.
// A non-dominant weight is replaced by its sorted representative, so all
// three routes agree on every ordering of the weight.
QPolynomial lusztig_kostka(const Partition& lambda, const Weight& mu, int rank);
QPolynomial lusztig_kostka_serial(const Partition& lambda, const Weight& mu, int rank);

// Generating function of the charge over Tab(lambda, mu).
QPolynomial charge_kostka(const Partition& lambda, const Weight& mu, int rank);
QPolynomial charge_kostka_serial(const Partition& lambda, const Weight& mu, int rank);

// Generating function of the orbit-mean statistic over Tab(lambda, mu).
QPolynomial mean_kostka(const Partition& lambda, const Weight& mu, int rank);
QPolynomial mean_kostka_serial(const Partition& lambda, const Weight& mu, int rank);

} // namespace plactic
