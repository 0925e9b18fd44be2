#pragma once

#include <optional>
#include <vector>

#include "plactic/enumerate.hpp"
#include "plactic/tableau.hpp"

namespace plactic {

// Positions (0-based) of the letters i and i+1 that survive the iterated
// bracketing of factors (i+1, i). The survivors read, in position order,
// i^r (i+1)^s: every unpaired low position precedes every unpaired high
// position.
struct Signature {
    std::vector<int> low;  // surviving positions holding letter i
    std::vector<int> high; // surviving positions holding letter i+1
};

Signature signature(int color, const Word& w);

// Raising operator: turns the leftmost surviving i+1 into i; nullopt when
// the word is at the top of its colour string. Only letters at surviving
// positions ever change.
std::optional<Word> eps(int color, const Word& w);

// Lowering operator: rightmost surviving i becomes i+1; nullopt at the
// bottom of the string.
std::optional<Word> phi(int color, const Word& w);

// String reflection: rewrites the surviving subword i^r (i+1)^s as
// i^s (i+1)^r. Involution; transposes weight entries color, color+1.
Word sigma(int color, const Word& w);

// Reverse the word and send each letter l to rank+2-l. Anti-automorphism
// of the word algebra; on the crystal graph it reverses every arrow and
// swaps colour i with rank+1-i.
Word reverse_complement(const Word& w);

// Lifts through row_reading / insertion; all four operators are
// compatible with the plactic congruence.
std::optional<Tableau> eps(int color, const Tableau& t);
std::optional<Tableau> phi(int color, const Tableau& t);
Tableau sigma(int color, const Tableau& t);
Tableau reverse_complement(const Tableau& t);

// d_i = distance from t to the nearest end of its colour-i string,
// computed from the surviving subword as min(r_i, s_i). Length rank.
std::vector<int> string_exponents(const Tableau& t);

// The same numbers obtained by literally iterating eps until it dies.
// For rectangular weight this agrees with string_exponents entrywise;
// kept as the independent route for that check.
std::vector<int> eps_exponents(const Tableau& t);

// d(t) = sum i * d_i and its colour-reversed partner sum (rank+1-i) * d_i.
long long d_stat(const Tableau& t);
long long dprime_stat(const Tableau& t);

struct CrystalEdge {
    int source;
    int color;
    int target;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

// Vertices in enumeration order; edges t -> phi_color(t) sorted by
// (source, color).
struct CrystalGraph {
    Partition shape;
    int rank = 0;
    std::vector<Tableau> vertices;
    std::vector<CrystalEdge> edges;
};

CrystalGraph crystal_graph(const Partition& lambda, int rank);
CrystalGraph crystal_graph_serial(const Partition& lambda, int rank);

// Every vertex reachable from the highest-weight vertex along lowering
// edges.
bool is_connected(const CrystalGraph& g);

} // namespace plactic
