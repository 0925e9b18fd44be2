#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "plactic/cyclage.hpp"
#include "plactic/orbits.hpp"

using namespace plactic;

namespace {

const Tableau ex_t({{1, 1, 2}, {3, 4}}, 3);
const Tableau ex_u({{1, 1, 3}, {2, 4}}, 3);
const Tableau ex_v({{1, 1, 4}, {2, 3}}, 3);

} // namespace

TEST_CASE("orbit of the worked tableau") {
    Orbit o = orbit(ex_t);
    REQUIRE(o.members.size() == 4);
    std::set<Weight> weights;
    for (const Tableau& m : o.members)
        weights.insert(m.weight());
    CHECK(weights == std::set<Weight>{{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}});
    CHECK(o.representative == ex_t);
}

TEST_CASE("six-element orbit in the rank-3 square") {
    // column readings 2121, 3131, 4141, 3232, 4242, 4343
    Orbit o = orbit(Tableau({{1, 1}, {2, 2}}, 3));
    REQUIRE(o.members.size() == 6);
    std::set<std::string> cols;
    for (const Tableau& m : o.members)
        cols.insert(column_reading(m));
    CHECK(cols == std::set<std::string>{"2121", "3131", "4141", "3232", "4242", "4343"});
}

TEST_CASE("rectangular tableau is alone in its orbit") {
    Tableau y = yamanouchi_tableau(Partition({2, 2, 2}), 2);
    CHECK(orbit(y).members == std::vector<Tableau>{y});
}

TEST_CASE("fixed points") {
    auto fixed22 = fixed_points(Partition({2, 2}), 3);
    REQUIRE(fixed22.size() == 2);
    std::set<std::string> cols;
    for (const Tableau& t : fixed22)
        cols.insert(column_reading(t));
    CHECK(cols == std::set<std::string>{"2143", "3142"});

    // (2,1) at rank 2: both standard tableaux sit mid-string
    CHECK(fixed_points(Partition({2, 1}), 2).size() == 2);

    // a full rectangle admits exactly one tableau and it is fixed
    CHECK(fixed_points(Partition({2, 2, 2}), 2).size() == 1);

    // fixed points are exactly the constant-weight tableaux
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= 6; ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                std::size_t expect = 0;
                if (m % (rank + 1) == 0)
                    expect = enumerate_tableaux(lambda, rank, Weight(rank + 1, m / (rank + 1)))
                                 .size();
                CHECK(fixed_points(lambda, rank).size() == expect);
            }
}

TEST_CASE("orbit means") {
    CHECK(mean_b(ex_t) == 3);
    CHECK(mean_b(ex_u) == 2);
    CHECK(mean_b(ex_v) == 4);

    // singleton orbit: mean equals the statistic itself
    Tableau y = yamanouchi_tableau(Partition({2, 2, 2}), 2);
    CHECK(mean_b(y) == d_stat(y));

    // b'(row tableau) = ||mu||
    CHECK(mean_bprime(row_tableau({2, 2, 1}, 2)) == 4);
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= 6; ++m)
            for (const Partition& mup : partitions_of(m, rank + 1)) {
                Weight mu(rank + 1, 0);
                for (int i = 0; i < mup.length(); ++i)
                    mu[i] = mup.part(i);
                CHECK(mean_bprime(row_tableau(mu, rank)) == weight_norm(mu));
            }
}

TEST_CASE("orbit mean equals charge after reverse_complement") {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= 6; ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1))
                for (const Tableau& t : enumerate_tableaux(lambda, rank))
                    CHECK(mean_b(t) == charge_any_weight(reverse_complement(t)));
}

TEST_CASE("moore-coxeter relations") {
    CHECK(moore_coxeter_check(Partition({2, 1}), 2).ok);
    CHECK(moore_coxeter_check(Partition({2, 2}), 3).ok);
    CHECK(moore_coxeter_check(Partition({1}), 3).ok);
    CHECK(moore_coxeter_check(Partition({3, 2, 1}), 3).ok);
}

TEST_CASE("chain decomposition") {
    Orbit o = orbit(ex_t);
    auto chains = chain_decompose(o);

    // chains partition the orbit
    std::size_t total = 0;
    std::set<Tableau> seen;
    for (const Chain& c : chains) {
        total += c.size();
        seen.insert(c.begin(), c.end());
    }
    CHECK(total == o.members.size());
    CHECK(seen.size() == o.members.size());

    // consecutive members drop the first reading letter by one
    for (const Chain& c : chains)
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            int fu = row_reading(c[i]).letters.front();
            int fv = row_reading(c[i + 1]).letters.front();
            CHECK(fv == fu - 1);
            CHECK(sigma(fv, c[i]) == c[i + 1]);
        }

    // this orbit splits as {t4 ~> t3}, {t2}, {t1}
    std::multiset<std::size_t> sizes;
    for (const Chain& c : chains)
        sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 2});

    // singleton orbit gives one singleton chain
    Orbit singleton = orbit(yamanouchi_tableau(Partition({2, 2, 2}), 2));
    CHECK(chain_decompose(singleton).size() == 1);
}

TEST_CASE("chain means rise by one under initial cyclage") {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 2; m <= 6; ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                if (lambda.length() <= 1)
                    continue;
                std::set<Tableau> taken;
                for (const Tableau& t : enumerate_tableaux(lambda, rank)) {
                    if (taken.count(t))
                        continue;
                    Orbit o = orbit(t);
                    taken.insert(o.members.begin(), o.members.end());
                    for (const Chain& c : chain_decompose(o)) {
                        long long before = 0, after = 0;
                        for (const Tableau& u : c) {
                            before += dprime_stat(u);
                            after += dprime_stat(initial_cyclage(u));
                        }
                        CHECK(after == before + static_cast<long long>(c.size()));
                    }
                }
            }
}
