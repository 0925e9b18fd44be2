#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "plactic/partition.hpp"

namespace plactic {

// A word over the alphabet {1, ..., rank+1}. The rank is carried
// explicitly because several operators depend on the alphabet size,
// not just on the letters present.
struct Word {
    std::vector<int> letters;
    int rank = 0;

    int size() const { return static_cast<int>(letters.size()); }
    Weight weight() const; // length rank+1

    friend auto operator<=>(const Word&, const Word&) = default;
};

std::string to_string(const Word& w); // "211" below 10 letters, "2,1,1" above

// Semistandard Young tableau in French convention: rows are stored
// bottom row first, rows weakly increase left to right, columns strictly
// increase bottom to top. Letters live in {1, ..., rank+1}.
class Tableau {
public:
    Tableau() = default;
    Tableau(std::vector<std::vector<int>> rows, int rank); // validates
    static Tableau empty(int rank) { return Tableau({}, rank); }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int rank() const { return rank_; }
    int size() const;
    Partition shape() const;
    Weight weight() const; // length rank+1

    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    int rank_ = 0;
};

// Top row first, each row left to right. The first letter of the row
// reading of a tableau with more than one row is its top-left entry,
// which is what the cyclage machinery cycles.
Word row_reading(const Tableau& t);

// Columns left to right, each read top to bottom. Display form only;
// nothing downstream depends on it.
std::string column_reading(const Tableau& t);

// Row insertion of one letter; returns the row index of the new cell.
std::pair<Tableau, int> insert_letter(const Tableau& t, int x);

// Robinson-Schensted: P is semistandard, Q is the standard recording
// tableau of the same shape.
std::pair<Tableau, Tableau> schensted(const Word& w);

// P alone, for the many callers that do not need Q.
Tableau insertion_tableau(const Word& w);

bool knuth_equivalent(const Word& a, const Word& b);

// Class of reading(a) . reading(b); associative with the empty tableau
// as identity.
Tableau plactic_product(const Tableau& a, const Tableau& b);

// The unique tableau of shape and weight lambda: row r filled with r+1.
Tableau yamanouchi_tableau(const Partition& lambda, int rank);

// Class of the weakly increasing word 1^{mu_1} 2^{mu_2} ...; mu must be
// a partition. This is the minimal element of the cyclage order.
Tableau row_tableau(const Weight& mu, int rank);

bool is_yamanouchi(const Tableau& t);

} // namespace plactic
