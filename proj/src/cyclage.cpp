#include "plactic/cyclage.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "plactic/crystal.hpp"

namespace plactic {

Tableau initial_cyclage(const Tableau& t) {
    if (t.rows().size() <= 1)
        throw row_tableau_error("initial_cyclage: row tableau has no cyclage");
    Word w = row_reading(t);
    std::rotate(w.letters.begin(), w.letters.begin() + 1, w.letters.end());
    return insertion_tableau(w);
}

std::vector<std::pair<int, Tableau>> cyclages(const Tableau& t) {
    const Weight mu = t.weight();
    if (!is_dominant(mu))
        throw domain_error("cyclages: weight must be a partition");
    std::vector<std::pair<int, Tableau>> out;
    if (t.rows().size() <= 1)
        return out;
    std::set<std::pair<int, Tableau>> seen;
    for (int x = 2; x <= t.rank() + 1; ++x) {
        if (mu[x - 1] == 0)
            continue;
        Weight rest = mu;
        --rest[x - 1];
        for (const Tableau& u : tableaux_of_weight(rest, t.rank())) {
            Word left = row_reading(u);
            left.letters.insert(left.letters.begin(), x);
            if (insertion_tableau(left) != t)
                continue;
            Word right = row_reading(u);
            right.letters.push_back(x);
            seen.emplace(x, insertion_tableau(right));
        }
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

int cocharge(const Tableau& t) {
    const Weight mu = t.weight();
    if (!is_dominant(mu))
        throw domain_error("cocharge: weight must be a partition");
    const long long bound = weight_norm(mu);
    Tableau cur = t;
    int steps = 0;
    while (cur.rows().size() > 1) {
        cur = initial_cyclage(cur);
        if (++steps > bound)
            throw std::logic_error("cocharge: exceeded ||mu|| cyclage steps");
    }
    return steps;
}

long long charge(const Tableau& t) {
    return weight_norm(t.weight()) - cocharge(t);
}

long long charge_any_weight(const Tableau& t) {
    Tableau cur = t;
    Weight mu = cur.weight();
    while (!is_dominant(mu)) {
        for (std::size_t i = 0; i + 1 < mu.size(); ++i)
            if (mu[i] < mu[i + 1]) {
                cur = sigma(static_cast<int>(i) + 1, cur);
                break;
            }
        mu = cur.weight();
    }
    return charge(cur);
}

CyclageGraph cyclage_graph(const Weight& mu, int rank) {
    if (!is_dominant(mu))
        throw domain_error("cyclage_graph: weight must be a partition");
    CyclageGraph g;
    g.mu = mu;
    g.rank = rank;
    g.vertices = tableaux_of_weight(mu, rank);
    std::map<Tableau, int> index;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        index.emplace(g.vertices[v], v);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        const Tableau& t = g.vertices[v];
        g.cocharges.push_back(cocharge(t));
        if (t.rows().size() <= 1)
            continue;
        const Tableau init = initial_cyclage(t);
        const int first = row_reading(t).letters.front();
        for (const auto& [x, img] : cyclages(t))
            g.edges.push_back({v, x, index.at(img), x == first && img == init});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<int> cyclage_tree(const CyclageGraph& g) {
    std::vector<int> parent(g.vertices.size(), -1);
    for (const auto& e : g.edges)
        if (e.initial)
            parent[e.source] = e.target;
    return parent;
}

} // namespace plactic
