#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plactic/enumerate.hpp"
#include "plactic/kostka.hpp"

using namespace plactic;

namespace {

// independent oracle: enumerate multiplicity vectors over the positive
// roots directly; every multiplicity is bounded by the sum of the prefix
// sums of v, since each root raises at least one prefix sum by one
QPolynomial brute_kostant(const std::vector<int>& v, int rank) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            roots.emplace_back(i, j);
    int cap = 0, run = 0;
    for (std::size_t t = 0; t + 1 < v.size(); ++t) {
        run += v[t];
        cap += std::max(run, 0);
    }
    QPolynomial acc;
    std::vector<int> rest(v);
    auto rec = [&](auto&& self, std::size_t idx, int used) -> void {
        if (idx == roots.size()) {
            for (int x : rest)
                if (x != 0)
                    return;
            acc.add(used, 1);
            return;
        }
        auto [i, j] = roots[idx];
        for (int m = 0; m <= cap; ++m) {
            if (m) {
                --rest[i];
                ++rest[j];
            }
            self(self, idx + 1, used + m);
        }
        rest[i] += cap;
        rest[j] -= cap;
    };
    rec(rec, 0, 0);
    return acc;
}

QPolynomial qp(std::initializer_list<std::pair<int, long long>> terms) {
    QPolynomial p;
    for (auto [e, c] : terms)
        p.add(e, c);
    return p;
}

Weight pad(const Partition& p, int rank) {
    Weight mu(rank + 1, 0);
    for (int i = 0; i < p.length(); ++i)
        mu[i] = p.part(i);
    return mu;
}

} // namespace

TEST_CASE("q-analogue of the partition function") {
    CHECK(q_kostant({1, -1}, 1) == qp({{1, 1}}));
    CHECK(q_kostant({1, 0, -1}, 2) == qp({{1, 1}, {2, 1}}));
    CHECK(q_kostant({0, 0, 0}, 2) == QPolynomial::one());
    CHECK(q_kostant({-1, 1}, 1).is_zero());
    CHECK(q_kostant({2, 0, -2}, 2) == brute_kostant({2, 0, -2}, 2));

    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            std::vector<int> v{a, b, -(a + b)};
            CHECK(q_kostant(v, 2) == brute_kostant(v, 2));
        }
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) {
                std::vector<int> v{a, b, c, -(a + b + c)};
                CHECK(q_kostant(v, 3) == brute_kostant(v, 3));
            }
}

TEST_CASE("alternating-sum polynomial") {
    // the index convention is pinned by K_{lambda,lambda} = 1
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= 6; ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1))
                CHECK(lusztig_kostka(lambda, pad(lambda, rank), rank) == QPolynomial::one());

    CHECK(lusztig_kostka(Partition({2, 1}), {1, 1, 1}, 2) == qp({{1, 1}, {2, 1}}));
    CHECK(lusztig_kostka(Partition({3, 2}), {2, 1, 1, 1}, 3) == qp({{2, 1}, {3, 1}, {4, 1}}));

    // every ordering of the weight names the same polynomial
    for (const Weight& mu : std::vector<Weight>{{2, 1, 0}, {1, 2, 0}, {0, 1, 2}, {1, 0, 2}})
        CHECK(lusztig_kostka(Partition({2, 1}), mu, 2) ==
              lusztig_kostka(Partition({2, 1}), {2, 1, 0}, 2));

    CHECK_THROWS_AS(lusztig_kostka(Partition({3}), {1, 1}, 1), size_mismatch);
    CHECK_THROWS_AS(lusztig_kostka(Partition({1, 1, 1}), {2, 1}, 1), size_mismatch);
}

TEST_CASE("charge route") {
    CHECK(charge_kostka(Partition({2, 1}), {1, 1, 1}, 2) == qp({{1, 1}, {2, 1}}));
    CHECK(charge_kostka(Partition({3, 2}), {2, 1, 1, 1}, 3) == qp({{2, 1}, {3, 1}, {4, 1}}));
    CHECK(charge_kostka(Partition({2, 2}), {2, 2, 0}, 2) == QPolynomial::one());
    // non-partition weight: same polynomial as the sorted weight
    CHECK(charge_kostka(Partition({2, 1}), {1, 2, 0}, 2) ==
          charge_kostka(Partition({2, 1}), {2, 1, 0}, 2));
}

TEST_CASE("orbit-mean route") {
    CHECK(mean_kostka(Partition({2, 1}), {1, 1, 1}, 2) == qp({{1, 1}, {2, 1}}));
    CHECK(mean_kostka(Partition({3, 2}), {2, 1, 1, 1}, 3) == qp({{2, 1}, {3, 1}, {4, 1}}));
}

TEST_CASE("three-way agreement with counting") {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= 5; ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1))
                for (const Partition& mup : partitions_of(m, rank + 1)) {
                    const Weight mu = pad(mup, rank);
                    const QPolynomial a = lusztig_kostka(lambda, mu, rank);
                    const QPolynomial b = charge_kostka(lambda, mu, rank);
                    const QPolynomial c = mean_kostka(lambda, mu, rank);
                    CHECK(a == b);
                    CHECK(b == c);
                    CHECK(a.nonnegative());
                    CHECK(a.evaluate_at_one() ==
                          static_cast<long long>(enumerate_tableaux(lambda, rank, mu).size()));
                }
}

TEST_CASE("parallel kernels match serial") {
    const Partition lambda({4, 2, 1});
    const Weight mu{2, 2, 2, 1};
    CHECK(lusztig_kostka(lambda, mu, 3) == lusztig_kostka_serial(lambda, mu, 3));
    CHECK(charge_kostka(lambda, mu, 3) == charge_kostka_serial(lambda, mu, 3));
    CHECK(mean_kostka(lambda, mu, 3) == mean_kostka_serial(lambda, mu, 3));
}
