#include "plactic/crystal.hpp"

#include <algorithm>
#include <map>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plactic {

/*
  The colour-i operators act through the signature rule. Bracket every
  factor (i+1, i); the letters untouched by that pass form a subword, which
  is bracketed again, and so on until no factor (i+1, i) remains. A single
  left-to-right scan with a stack of open i+1's computes the fixpoint: an i
  closes the most recent open i+1, and whatever is never matched survives.
  The surviving subword has the shape i^r (i+1)^s, and eps / phi / sigma
  rewrite it as i^{r+1} (i+1)^{s-1} / i^{r-1} (i+1)^{s+1} / i^s (i+1)^r,
  leaving every bracketed letter where it was.
*/

Signature signature(int color, const Word& w) {
    Signature sig;
    std::vector<int> open;
    for (int p = 0; p < w.size(); ++p) {
        int l = w.letters[p];
        if (l == color + 1) {
            open.push_back(p);
        } else if (l == color) {
            if (!open.empty())
                open.pop_back();
            else
                sig.low.push_back(p);
        }
    }
    sig.high = std::move(open);
    return sig;
}

std::optional<Word> eps(int color, const Word& w) {
    Signature sig = signature(color, w);
    if (sig.high.empty())
        return std::nullopt;
    Word out = w;
    out.letters[sig.high.front()] = color;
    return out;
}

std::optional<Word> phi(int color, const Word& w) {
    Signature sig = signature(color, w);
    if (sig.low.empty())
        return std::nullopt;
    Word out = w;
    out.letters[sig.low.back()] = color + 1;
    return out;
}

Word sigma(int color, const Word& w) {
    Signature sig = signature(color, w);
    const int r = static_cast<int>(sig.low.size());
    const int s = static_cast<int>(sig.high.size());
    std::vector<int> pos = sig.low;
    pos.insert(pos.end(), sig.high.begin(), sig.high.end());
    Word out = w;
    for (int j = 0; j < r + s; ++j)
        out.letters[pos[j]] = j < s ? color : color + 1;
    return out;
}

Word reverse_complement(const Word& w) {
    Word out;
    out.rank = w.rank;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(w.rank + 2 - *it);
    return out;
}

std::optional<Tableau> eps(int color, const Tableau& t) {
    auto w = eps(color, row_reading(t));
    if (!w)
        return std::nullopt;
    return insertion_tableau(*w);
}

std::optional<Tableau> phi(int color, const Tableau& t) {
    auto w = phi(color, row_reading(t));
    if (!w)
        return std::nullopt;
    return insertion_tableau(*w);
}

Tableau sigma(int color, const Tableau& t) {
    return insertion_tableau(sigma(color, row_reading(t)));
}

Tableau reverse_complement(const Tableau& t) {
    return insertion_tableau(reverse_complement(row_reading(t)));
}

std::vector<int> string_exponents(const Tableau& t) {
    const Word w = row_reading(t);
    std::vector<int> d(t.rank());
    for (int i = 1; i <= t.rank(); ++i) {
        Signature sig = signature(i, w);
        d[i - 1] = static_cast<int>(std::min(sig.low.size(), sig.high.size()));
    }
    return d;
}

std::vector<int> eps_exponents(const Tableau& t) {
    std::vector<int> d(t.rank());
    for (int i = 1; i <= t.rank(); ++i) {
        Word w = row_reading(t);
        int k = 0;
        while (auto up = eps(i, w)) {
            w = *up;
            ++k;
        }
        d[i - 1] = k;
    }
    return d;
}

long long d_stat(const Tableau& t) {
    auto d = string_exponents(t);
    long long s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += static_cast<long long>(i + 1) * d[i];
    return s;
}

long long dprime_stat(const Tableau& t) {
    auto d = string_exponents(t);
    long long s = 0;
    const int n = static_cast<int>(d.size());
    for (int i = 1; i <= n; ++i)
        s += static_cast<long long>(n - i + 1) * d[i - 1];
    return s;
}

namespace {

CrystalGraph assemble(const Partition& lambda, int rank,
                      std::vector<Tableau> vertices,
                      std::vector<std::vector<std::optional<Tableau>>> images) {
    CrystalGraph g;
    g.shape = lambda;
    g.rank = rank;
    g.vertices = std::move(vertices);
    std::map<Tableau, int> index;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        index.emplace(g.vertices[v], v);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        for (int i = 1; i <= rank; ++i)
            if (images[v][i - 1])
                g.edges.push_back({v, i, index.at(*images[v][i - 1])});
    // already sorted: v ascending, colour ascending
    return g;
}

} // namespace

CrystalGraph crystal_graph_serial(const Partition& lambda, int rank) {
    std::vector<Tableau> vertices = enumerate_tableaux(lambda, rank);
    std::vector<std::vector<std::optional<Tableau>>> images(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        images[v].resize(rank);
        for (int i = 1; i <= rank; ++i)
            images[v][i - 1] = phi(i, vertices[v]);
    }
    return assemble(lambda, rank, std::move(vertices), std::move(images));
}

CrystalGraph crystal_graph(const Partition& lambda, int rank) {
    std::vector<Tableau> vertices = enumerate_tableaux(lambda, rank);
    const int nv = static_cast<int>(vertices.size());
    std::vector<std::vector<std::optional<Tableau>>> images(nv);
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < nv; ++v) {
        images[v].resize(rank);
        for (int i = 1; i <= rank; ++i)
            images[v][i - 1] = phi(i, vertices[v]);
    }
    return assemble(lambda, rank, std::move(vertices), std::move(images));
}

bool is_connected(const CrystalGraph& g) {
    if (g.vertices.empty())
        return true;
    const Tableau top = yamanouchi_tableau(g.shape, g.rank);
    int start = -1;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        if (g.vertices[v] == top)
            start = v;
    if (start < 0)
        return false;
    // directed reachability: the lowering operators generate everything
    // from the highest-weight vertex
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const auto& e : g.edges)
        adj[e.source].push_back(e.target);
    std::vector<char> seen(g.vertices.size(), 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    std::size_t count = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++count;
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                q.push(u);
            }
    }
    return count == g.vertices.size();
}

} // namespace plactic
