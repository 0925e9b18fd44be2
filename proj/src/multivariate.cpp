#include "plactic/multivariate.hpp"

#include <algorithm>
#include <set>

#include "plactic/crystal.hpp"
#include "plactic/enumerate.hpp"

namespace plactic {

namespace {

Weight rectangle(int k, int rank) {
    return Weight(rank + 1, k);
}

void check_rectangular(const Partition& lambda, int k, int rank, const char* who) {
    if (k < 0 || lambda.size() != k * (rank + 1))
        throw size_mismatch(std::string(who) + ": |shape| != k*(rank+1)");
}

} // namespace

MultiPolynomial bold_kostka_serial(const Partition& lambda, int k, int rank) {
    check_rectangular(lambda, k, rank, "bold_kostka");
    MultiPolynomial p(rank);
    for (const Tableau& t : enumerate_tableaux(lambda, rank, rectangle(k, rank)))
        p.add(string_exponents(t), 1);
    return p;
}

MultiPolynomial bold_kostka(const Partition& lambda, int k, int rank) {
    check_rectangular(lambda, k, rank, "bold_kostka");
    const auto ts = enumerate_tableaux(lambda, rank, rectangle(k, rank));
    const int nt = static_cast<int>(ts.size());
    MultiPolynomial p(rank);
#pragma omp parallel
    {
        MultiPolynomial local(rank);
#pragma omp for schedule(dynamic) nowait
        for (int i = 0; i < nt; ++i)
            local.add(string_exponents(ts[i]), 1);
#pragma omp critical(bold_merge)
        p += local;
    }
    return p;
}

Completion completion(const Tableau& t, int k) {
    if (t.weight() != rectangle(k, t.rank()))
        throw size_mismatch("completion: weight is not the k-rectangle");
    const std::vector<int> d = string_exponents(t);
    Word w;
    w.rank = t.rank();
    for (int i = t.rank(); i >= 1; --i)
        for (int rep = 0; rep < d[i - 1]; ++rep)
            for (int l = i; l >= 1; --l)
                w.letters.push_back(l);
    Completion c;
    c.u = insertion_tableau(w);
    c.nu = to_partition(c.u.weight());
    return c;
}

Tableau completion_by_search(const Tableau& t, int k) {
    if (t.weight() != rectangle(k, t.rank()))
        throw size_mismatch("completion_by_search: weight is not the k-rectangle");
    const auto d = string_exponents(t);
    int budget = 0;
    for (int x : d)
        budget += x;
    Tableau cur = t;
    Word uw;
    uw.rank = t.rank();
    while (!is_yamanouchi(cur)) {
        int colour = 0;
        for (int i = 1; i <= t.rank() && colour == 0; ++i)
            if (eps(i, cur))
                colour = i;
        if (colour == 0 || --budget < 0)
            throw std::logic_error("completion_by_search: no free letter before Yamanouchi");
        Word col;
        col.rank = t.rank();
        for (int l = colour; l >= 1; --l)
            col.letters.push_back(l);
        cur = plactic_product(cur, insertion_tableau(col));
        uw.letters.insert(uw.letters.end(), col.letters.begin(), col.letters.end());
    }
    return insertion_tableau(uw);
}

Partition build_lambda(const Partition& alpha, const Partition& beta, int k, int rank) {
    const int r = alpha.length();
    const int s = beta.length();
    if (alpha.size() != beta.size())
        throw shape_infeasible("build_lambda: |alpha| != |beta|");
    if (beta.part(0) > k)
        throw shape_infeasible("build_lambda: beta_1 > k");
    if (s > rank)
        throw shape_infeasible("build_lambda: beta longer than rank");
    if (r + s > rank + 1)
        throw shape_infeasible("build_lambda: alpha and beta overlap");
    std::vector<int> parts;
    parts.reserve(rank + 1);
    for (int i = 0; i < r; ++i)
        parts.push_back(alpha.part(i) + k);
    for (int i = 0; i < rank + 1 - r - s; ++i)
        parts.push_back(k);
    for (int i = s - 1; i >= 0; --i)
        parts.push_back(k - beta.part(i));
    return Partition(std::move(parts));
}

MultiPolynomial schur_poly(const Partition& lambda, int nvars) {
    MultiPolynomial p(nvars);
    for (const Tableau& t : enumerate_tableaux(lambda, nvars - 1))
        p.add(t.weight(), 1);
    return p;
}

/*
  The swap sends a tableau of rectangular weight and shape glued from
  (alpha, beta) to one glued from (beta, alpha). Complete each column of
  the part of t inside the k x (rank+1) rectangle with the letters it is
  missing, stacked on top in decreasing order from bottom to top; those
  added cells, rotated half a turn, are the part of the image beyond
  column k. Conversely, rotate the part of t beyond column k into the top
  right corner of an empty rectangle and fill each column below with its
  complementary letters in increasing order; after discarding the rotated
  cells, what remains is the part of the image inside the rectangle. Both
  halves are half-turn rotations, which is why the map is an involution.
*/
Tableau swap_involution(const Tableau& t, const Partition& alpha, const Partition& beta,
                        int k, int rank) {
    if (k < std::max(alpha.part(0), beta.part(0)))
        throw k_too_small("swap_involution: k < max(alpha_1, beta_1)");
    const Partition lambda = build_lambda(alpha, beta, k, rank);
    if (t.shape() != lambda)
        throw shape_infeasible("swap_involution: tableau shape mismatch");
    if (t.weight() != rectangle(k, rank))
        throw size_mismatch("swap_involution: weight is not the k-rectangle");

    const int nrows = rank + 1;
    const auto& rows = t.rows();
    const Partition colheights = conjugate(lambda);

    // rotated overhang of t: cell (r, k+j) lands at (nrows-1-r, k-1-j)
    std::vector<std::vector<int>> mirror(nrows, std::vector<int>(k, 0));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int j = 0; k + j < static_cast<int>(rows[r].size()); ++j)
            mirror[nrows - 1 - r][k - 1 - j] = rows[r][k + j];

    std::vector<std::vector<int>> out(nrows);

    // inside the rectangle: each column takes the letters the rotated
    // overhang does not use, bottom-up
    for (int c = 0; c < k; ++c) {
        std::set<int> taken;
        for (int r = 0; r < nrows; ++r)
            if (mirror[r][c] != 0)
                taken.insert(mirror[r][c]);
        int r = 0;
        for (int v = 1; v <= nrows; ++v)
            if (!taken.count(v)) {
                if (static_cast<int>(out[r].size()) != c)
                    throw std::logic_error("swap_involution: ragged rectangle fill");
                out[r++].push_back(v);
            }
    }

    // beyond the rectangle: complete each column of t and rotate the
    // added cells; the cell stacked m-th above column c carries the
    // m-th largest missing letter
    for (int c = k - 1; c >= 0; --c) {
        std::vector<int> missing;
        for (int v = nrows; v >= 1; --v) {
            bool present = false;
            for (int r = 0; r < colheights.part(c) && !present; ++r)
                present = rows[r][c] == v;
            if (!present)
                missing.push_back(v);
        }
        for (int m = 0; m < static_cast<int>(missing.size()); ++m) {
            const int src_row = colheights.part(c) + m;
            const int dst_row = nrows - 1 - src_row;
            out[dst_row].push_back(missing[m]);
        }
    }

    while (!out.empty() && out.back().empty())
        out.pop_back();
    Tableau image(std::move(out), rank);
    if (image.shape() != build_lambda(beta, alpha, k, rank))
        throw std::logic_error("swap_involution: image has wrong shape");
    return image;
}

QPolynomial specialize(const MultiPolynomial& p) {
    return p.specialize_principal();
}

bool stability_check(const Partition& lambda, int k, int r, int rank) {
    check_rectangular(lambda, k, rank, "stability_check");
    if (r < 0)
        throw domain_error("stability_check: negative layer count");
    std::vector<int> grown(rank + 1, r);
    for (int i = 0; i <= rank; ++i)
        grown[i] += lambda.part(i);
    return bold_kostka(Partition(std::move(grown)), k + r, rank) ==
           bold_kostka(lambda, k, rank);
}

namespace {

std::vector<std::vector<int>> compositions_of(const Partition& mu) {
    std::vector<int> parts = mu.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

} // namespace

IdentityReport standard_weight_identity(int rank) {
    IdentityReport rep;
    const int n1 = rank + 1;
    for (const Partition& lambda : partitions_of(n1, n1)) {
        const MultiPolynomial lhs = bold_kostka(lambda, 1, rank);
        const Partition lc = conjugate(lambda);
        MultiPolynomial rhs(rank);
        for (const Partition& mu : partitions_of(n1, n1)) {
            Weight muw(n1, 0);
            for (int i = 0; i < mu.length(); ++i)
                muw[i] = mu.part(i);
            const long long kostka =
                static_cast<long long>(enumerate_tableaux(lc, rank, muw).size());
            if (kostka == 0)
                continue;
            MultiPolynomial inner(rank);
            for (const auto& comp : compositions_of(mu)) {
                std::set<int> descents;
                int acc = 0;
                for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
                    acc += comp[i];
                    descents.insert(acc);
                }
                MultiPolynomial term = MultiPolynomial::constant(rank, 1);
                for (int d = 1; d <= rank; ++d) {
                    if (descents.count(d))
                        term = term * MultiPolynomial::variable(rank, d);
                    else
                        term = term * (MultiPolynomial::constant(rank, 1) -
                                       MultiPolynomial::variable(rank, d));
                }
                inner += term;
            }
            rhs += MultiPolynomial::constant(rank, kostka) * inner;
        }
        if (lhs != rhs) {
            rep.ok = false;
            rep.counterexample = "lambda=" + lambda.to_string() + ": " + lhs.to_string() +
                                 " != " + rhs.to_string();
            return rep;
        }
    }
    return rep;
}

} // namespace plactic
