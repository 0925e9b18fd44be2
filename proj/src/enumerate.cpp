#include "plactic/enumerate.hpp"

namespace plactic {

namespace {

struct Enumerator {
    const Partition& shape;
    int rank;
    const std::optional<Weight>& target;
    std::vector<std::vector<int>> rows;
    Weight used;
    std::vector<Tableau>& out;

    void fill(int r, int c) {
        if (r == shape.length()) {
            out.emplace_back(rows, rank);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, rows[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= rank + 1; ++v) {
            if (target && used[v - 1] >= (*target)[v - 1])
                continue;
            rows[r][c] = v;
            ++used[v - 1];
            fill(nr, nc);
            --used[v - 1];
        }
        rows[r][c] = 0;
    }
};

} // namespace

std::vector<Tableau> enumerate_tableaux(const Partition& shape, int rank,
                                        const std::optional<Weight>& weight) {
    std::vector<Tableau> out;
    if (weight) {
        if (static_cast<int>(weight->size()) != rank + 1)
            throw domain_error("enumerate_tableaux: weight length must be rank+1");
        if (weight_sum(*weight) != shape.size())
            throw size_mismatch("enumerate_tableaux: |shape| != |weight|");
        for (int m : *weight)
            if (m < 0)
                throw domain_error("enumerate_tableaux: negative weight entry");
    }
    if (shape.length() > rank + 1)
        return out; // no column fits
    if (shape.empty()) {
        out.push_back(Tableau::empty(rank));
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.length(); ++r)
        rows.emplace_back(shape.part(r), 0);
    Enumerator e{shape, rank, weight, std::move(rows), Weight(rank + 1, 0), out};
    e.fill(0, 0);
    return out;
}

std::vector<Tableau> tableaux_of_weight(const Weight& mu, int rank) {
    std::vector<Tableau> out;
    for (const Partition& shape : partitions_of(weight_sum(mu), rank + 1)) {
        auto ts = enumerate_tableaux(shape, rank, mu);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

} // namespace plactic
