#include "plactic/kostka.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plactic/cyclage.hpp"
#include "plactic/enumerate.hpp"
#include "plactic/orbits.hpp"

namespace plactic {

namespace {

// Positive roots e_i - e_j, i < j, in lexicographic (i,j) order.
std::vector<std::pair<int, int>> positive_roots(int rank) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            roots.emplace_back(i, j);
    return roots;
}

bool prefix_sums_ok(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) {
        s += x;
        if (s < 0)
            return false;
    }
    return s == 0;
}

struct KostantDP {
    const std::vector<std::pair<int, int>>& roots;
    std::map<std::pair<int, std::vector<int>>, QPolynomial> memo;

    // decompositions of v over roots[0..idx]
    QPolynomial run(int idx, const std::vector<int>& v) {
        const bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
        if (idx < 0)
            return zero ? QPolynomial::one() : QPolynomial();
        if (zero)
            return QPolynomial::one();
        auto key = std::make_pair(idx, v);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const auto [i, j] = roots[idx];
        QPolynomial acc;
        std::vector<int> rest = v;
        // prefix sums in [i, j) drop monotonically with the multiplicity,
        // so the loop stops at the first failure
        for (int m = 0; prefix_sums_ok(rest); ++m) {
            acc += QPolynomial::monomial(m) * run(idx - 1, rest);
            --rest[i];
            ++rest[j];
        }
        memo.emplace(std::move(key), acc);
        return acc;
    }
};

int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

struct LusztigTerms {
    std::vector<std::vector<int>> vectors;
    std::vector<int> signs;
};

LusztigTerms lusztig_terms(const Partition& lambda, const Weight& mu, int rank) {
    if (lambda.length() > rank + 1)
        throw size_mismatch("lusztig_kostka: shape longer than alphabet");
    if (static_cast<int>(mu.size()) != rank + 1)
        throw size_mismatch("lusztig_kostka: weight length must be rank+1");
    if (lambda.size() != weight_sum(mu))
        throw size_mismatch("lusztig_kostka: |shape| != |weight|");
    // the polynomial is attached to the orbit of the weight; evaluate at
    // the dominant representative (the raw sum at a non-dominant weight
    // is a different object and can go negative)
    Weight dom = mu;
    std::sort(dom.rbegin(), dom.rend());
    const int n1 = rank + 1;
    std::vector<int> lr(n1), mr(n1);
    for (int k = 0; k < n1; ++k) {
        lr[k] = lambda.part(k) + (rank - k);
        mr[k] = dom[k] + (rank - k);
    }
    LusztigTerms out;
    std::vector<int> perm(n1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> v(n1);
        for (int k = 0; k < n1; ++k)
            v[k] = lr[perm[k]] - mr[k];
        out.vectors.push_back(std::move(v));
        out.signs.push_back(permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

QPolynomial q_kostant(const std::vector<int>& v, int rank) {
    if (static_cast<int>(v.size()) != rank + 1)
        throw size_mismatch("q_kostant: vector length must be rank+1");
    KostantDP dp{positive_roots(rank), {}};
    return dp.run(static_cast<int>(dp.roots.size()) - 1, v);
}

QPolynomial lusztig_kostka_serial(const Partition& lambda, const Weight& mu, int rank) {
    LusztigTerms terms = lusztig_terms(lambda, mu, rank);
    KostantDP dp{positive_roots(rank), {}};
    const int top = static_cast<int>(dp.roots.size()) - 1;
    QPolynomial k;
    for (std::size_t w = 0; w < terms.vectors.size(); ++w) {
        QPolynomial p = dp.run(top, terms.vectors[w]);
        if (terms.signs[w] > 0)
            k += p;
        else
            k -= p;
    }
    return k;
}

QPolynomial lusztig_kostka(const Partition& lambda, const Weight& mu, int rank) {
    LusztigTerms terms = lusztig_terms(lambda, mu, rank);
    const int nw = static_cast<int>(terms.vectors.size());
    QPolynomial k;
#pragma omp parallel
    {
        KostantDP dp{positive_roots(rank), {}};
        const int top = static_cast<int>(dp.roots.size()) - 1;
        QPolynomial local;
#pragma omp for schedule(dynamic) nowait
        for (int w = 0; w < nw; ++w) {
            QPolynomial p = dp.run(top, terms.vectors[w]);
            if (terms.signs[w] > 0)
                local += p;
            else
                local -= p;
        }
#pragma omp critical(lusztig_merge)
        k += local;
    }
    return k;
}

namespace {

void check_pair(const Partition& lambda, const Weight& mu, int rank, const char* who) {
    if (lambda.length() > rank + 1)
        throw size_mismatch(std::string(who) + ": shape longer than alphabet");
    if (static_cast<int>(mu.size()) != rank + 1)
        throw size_mismatch(std::string(who) + ": weight length must be rank+1");
    if (lambda.size() != weight_sum(mu))
        throw size_mismatch(std::string(who) + ": |shape| != |weight|");
}

} // namespace

QPolynomial charge_kostka_serial(const Partition& lambda, const Weight& mu, int rank) {
    check_pair(lambda, mu, rank, "charge_kostka");
    QPolynomial k;
    for (const Tableau& t : enumerate_tableaux(lambda, rank, mu))
        k.add(static_cast<int>(charge_any_weight(t)), 1);
    return k;
}

QPolynomial charge_kostka(const Partition& lambda, const Weight& mu, int rank) {
    check_pair(lambda, mu, rank, "charge_kostka");
    const auto ts = enumerate_tableaux(lambda, rank, mu);
    const int nt = static_cast<int>(ts.size());
    QPolynomial k;
#pragma omp parallel
    {
        QPolynomial local;
#pragma omp for schedule(dynamic) nowait
        for (int i = 0; i < nt; ++i)
            local.add(static_cast<int>(charge_any_weight(ts[i])), 1);
#pragma omp critical(charge_merge)
        k += local;
    }
    return k;
}

QPolynomial mean_kostka_serial(const Partition& lambda, const Weight& mu, int rank) {
    check_pair(lambda, mu, rank, "mean_kostka");
    QPolynomial k;
    for (const Tableau& t : enumerate_tableaux(lambda, rank, mu))
        k.add(static_cast<int>(mean_b(t)), 1);
    return k;
}

QPolynomial mean_kostka(const Partition& lambda, const Weight& mu, int rank) {
    check_pair(lambda, mu, rank, "mean_kostka");
    const auto ts = enumerate_tableaux(lambda, rank, mu);
    const int nt = static_cast<int>(ts.size());
    QPolynomial k;
#pragma omp parallel
    {
        QPolynomial local;
#pragma omp for schedule(dynamic) nowait
        for (int i = 0; i < nt; ++i)
            local.add(static_cast<int>(mean_b(ts[i])), 1);
#pragma omp critical(mean_merge)
        k += local;
    }
    return k;
}

} // namespace plactic
