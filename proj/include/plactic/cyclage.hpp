#pragma once

#include <utility>
#include <vector>

#include "plactic/enumerate.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

// Cycles the first letter of the row reading: for reading a.v the result
// is the class of v.a. Defined for any weight; throws row_tableau_error
// on single-row shapes, where no cyclage exists.
Tableau initial_cyclage(const Tableau& t);

// All cyclages of t: pairs (x, t') with t = x.u and t' = u.x in the
// plactic monoid, over letters x >= 2. Requires the weight of t to be a
// partition. Deterministic order; empty for row tableaux. Found by brute
// force over candidate factor tableaux u, which is O(|Tab|) per vertex.
std::vector<std::pair<int, Tableau>> cyclages(const Tableau& t);

// Number of initial cyclages to reach the row tableau; the cyclage order
// is graded, so the initial path realizes the rank. Weight must be a
// partition.
int cocharge(const Tableau& t);

// charge = ||mu|| - cocharge
long long charge(const Tableau& t);

// Extension to arbitrary weight: sigma operations sort the weight into a
// partition (bubble order, deterministic), then charge. Constant on
// sigma-orbits.
long long charge_any_weight(const Tableau& t);

struct CyclageEdge {
    int source;
    int letter;  // the cycled letter
    int target;
    bool initial;
    friend auto operator<=>(const CyclageEdge&, const CyclageEdge&) = default;
};

// All tableaux of weight mu (any shape, at most rank+1 rows) with every
// cyclage arrow; cocharge stored per vertex. Unique sink is the row
// tableau; every arrow drops cocharge by exactly one.
struct CyclageGraph {
    Weight mu;
    int rank = 0;
    std::vector<Tableau> vertices;
    std::vector<int> cocharges;
    std::vector<CyclageEdge> edges;
};

CyclageGraph cyclage_graph(const Weight& mu, int rank);

// Parent index of each vertex along its initial cyclage, -1 at the root
// row tableau. Keeping only these arrows turns the graph into a spanning
// tree rooted at the row tableau.
std::vector<int> cyclage_tree(const CyclageGraph& g);

} // namespace plactic
