#pragma once

#include <string>
#include <vector>

#include "plactic/crystal.hpp"

namespace plactic {

// Closure of one tableau under sigma_1..sigma_n. Every member weight is a
// permutation of every other; the dominant weight occurs exactly once,
// and that member is the representative.
struct Orbit {
    std::vector<Tableau> members; // sorted, deterministic
    Tableau representative;
};

Orbit orbit(const Tableau& t);

// Orbits of Tab(lambda, .), ordered by first appearance in enumeration
// order.
std::vector<Orbit> orbit_decomposition(const Partition& lambda, int rank);

// Tableaux fixed by every sigma_i. These are exactly the tableaux of
// constant weight, but the check is the direct one.
std::vector<Tableau> fixed_points(const Partition& lambda, int rank);

// Arithmetic mean of d_stat (resp. dprime_stat) over the orbit of t.
// Integrality is guaranteed; a remainder throws non_integer_mean.
long long mean_b(const Tableau& t);
long long mean_bprime(const Tableau& t);

struct CheckReport {
    bool ok = true;
    std::string counterexample;
};

// sigma_i^2 = id, commutation at distance, and the braid relation,
// pointwise on Tab(lambda, .).
CheckReport moore_coxeter_check(const Partition& lambda, int rank);

// Maximal paths of the relation u ~> v: sigma_i(u) = v where the first
// reading letter of u is i+1 and that of v is i. The first letter of u
// determines i, so the relation is a partial matching and the components
// are genuinely linear; ordered head to tail, heads sorted.
using Chain = std::vector<Tableau>;

std::vector<Chain> chain_decompose(const Orbit& o);

} // namespace plactic
