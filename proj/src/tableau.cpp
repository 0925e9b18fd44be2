#include "plactic/tableau.hpp"

#include <algorithm>

namespace plactic {

Weight Word::weight() const {
    Weight mu(rank + 1, 0);
    for (int l : letters)
        ++mu[l - 1];
    return mu;
}

std::string to_string(const Word& w) {
    std::string s;
    bool sep = w.rank + 1 > 9;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (sep && i)
            s += ',';
        s += std::to_string(w.letters[i]);
    }
    return s;
}

Tableau::Tableau(std::vector<std::vector<int>> rows, int rank)
    : rows_(std::move(rows)), rank_(rank) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty())
            throw domain_error("tableau has an empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw domain_error("tableau shape is not a partition");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > rank_ + 1)
                throw domain_error("tableau letter out of range");
            if (c > 0 && row[c] < row[c - 1])
                throw domain_error("tableau row decreases");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw domain_error("tableau column not strictly increasing");
        }
    }
}

int Tableau::size() const {
    int n = 0;
    for (const auto& row : rows_)
        n += static_cast<int>(row.size());
    return n;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Weight Tableau::weight() const {
    Weight mu(rank_ + 1, 0);
    for (const auto& row : rows_)
        for (int l : row)
            ++mu[l - 1];
    return mu;
}

Word row_reading(const Tableau& t) {
    Word w;
    w.rank = t.rank();
    w.letters.reserve(t.size());
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        w.letters.insert(w.letters.end(), it->begin(), it->end());
    return w;
}

std::string column_reading(const Tableau& t) {
    Word w;
    w.rank = t.rank();
    const auto& rows = t.rows();
    int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < ncols; ++c)
        for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r)
            if (c < static_cast<int>(rows[r].size()))
                w.letters.push_back(rows[r][c]);
    return to_string(w);
}

std::pair<Tableau, int> insert_letter(const Tableau& t, int x) {
    auto rows = t.rows();
    int r = 0;
    for (;; ++r) {
        if (r == static_cast<int>(rows.size())) {
            rows.push_back({x});
            break;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            break;
        }
        std::swap(x, *it); // bump into the row above
    }
    return {Tableau(std::move(rows), t.rank()), r};
}

std::pair<Tableau, Tableau> schensted(const Word& w) {
    Tableau p = Tableau::empty(w.rank);
    std::vector<std::vector<int>> qrows;
    for (int k = 0; k < w.size(); ++k) {
        auto [next, r] = insert_letter(p, w.letters[k]);
        p = std::move(next);
        if (r == static_cast<int>(qrows.size()))
            qrows.emplace_back();
        qrows[r].push_back(k + 1);
    }
    int qrank = std::max(w.size() - 1, 0);
    return {std::move(p), Tableau(std::move(qrows), qrank)};
}

Tableau insertion_tableau(const Word& w) {
    Tableau p = Tableau::empty(w.rank);
    for (int l : w.letters)
        p = insert_letter(p, l).first;
    return p;
}

bool knuth_equivalent(const Word& a, const Word& b) {
    if (a.rank != b.rank)
        throw domain_error("knuth_equivalent: rank mismatch");
    return insertion_tableau(a) == insertion_tableau(b);
}

Tableau plactic_product(const Tableau& a, const Tableau& b) {
    if (a.rank() != b.rank())
        throw domain_error("plactic_product: rank mismatch");
    Tableau p = a;
    for (int l : row_reading(b).letters)
        p = insert_letter(p, l).first;
    return p;
}

Tableau yamanouchi_tableau(const Partition& lambda, int rank) {
    if (lambda.length() > rank + 1)
        throw domain_error("yamanouchi_tableau: partition longer than alphabet");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < lambda.length(); ++r)
        rows.emplace_back(lambda.part(r), r + 1);
    return Tableau(std::move(rows), rank);
}

Tableau row_tableau(const Weight& mu, int rank) {
    if (!is_dominant(mu))
        throw domain_error("row_tableau: weight is not a partition");
    if (static_cast<int>(mu.size()) > rank + 1 && weight_sum(Weight(mu.begin() + rank + 1, mu.end())) > 0)
        throw domain_error("row_tableau: weight longer than alphabet");
    std::vector<int> row;
    for (std::size_t i = 0; i < mu.size(); ++i)
        row.insert(row.end(), mu[i], static_cast<int>(i) + 1);
    if (row.empty())
        return Tableau::empty(rank);
    return Tableau({row}, rank);
}

bool is_yamanouchi(const Tableau& t) {
    const Weight mu = t.weight();
    const Partition sh = t.shape();
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] != sh.part(static_cast<int>(i)))
            return false;
    return true;
}

} // namespace plactic
