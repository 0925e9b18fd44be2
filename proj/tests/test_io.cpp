#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plactic/io.hpp"
#include "plactic/kostka.hpp"
#include "plactic/multivariate.hpp"

using namespace plactic;

TEST_CASE("tableau json round trip") {
    for (const Tableau& t : enumerate_tableaux(Partition({3, 2}), 3))
        CHECK(tableau_from_json(tableau_to_json(t)) == t);
    Tableau e = Tableau::empty(2);
    CHECK(tableau_from_json(tableau_to_json(e)) == e);
    CHECK(tableau_to_json(Tableau({{1, 1}, {2}}, 2)).dump() ==
          R"({"rows":[[1,1],[2]],"rank":2})");
}

TEST_CASE("qpolynomial json round trip") {
    const QPolynomial k = lusztig_kostka(Partition({3, 2}), {2, 1, 1, 1}, 3);
    CHECK(qpoly_from_json(qpoly_to_json(k)) == k);
    CHECK(qpoly_to_json(k).dump() == R"({"q":{"2":1,"3":1,"4":1}})");
    CHECK(qpoly_from_json(qpoly_to_json(QPolynomial())) == QPolynomial());
}

TEST_CASE("multipolynomial json round trip") {
    const MultiPolynomial p = bold_kostka(Partition({5, 2, 1}), 2, 3);
    CHECK(multipoly_from_json(multipoly_to_json(p)) == p);
    const json j = multipoly_to_json(p);
    CHECK(j.at("vars") == 3);
    // terms sorted by exponent vector
    std::vector<std::vector<int>> exps;
    for (const auto& t : j.at("terms"))
        exps.push_back(t.at("exp").get<std::vector<int>>());
    CHECK(std::is_sorted(exps.begin(), exps.end()));
}

TEST_CASE("dot exports") {
    const std::string crystal = crystal_to_dot(crystal_graph(Partition({2, 1}), 2));
    CHECK(crystal.find("digraph crystal") == 0);
    CHECK(crystal.find("label=\"211\"") != std::string::npos);
    CHECK(crystal.find("color=2") != std::string::npos);

    const CyclageGraph g = cyclage_graph({2, 2, 1}, 2);
    const std::string full = cyclage_to_dot(g);
    const std::string tree = cyclage_to_dot(g, true);
    CHECK(full.find("rank=same") != std::string::npos);
    CHECK(full.find("cocharge=4") != std::string::npos);
    // the tree keeps exactly the initial arrows, one per non-root vertex
    CHECK(std::count(tree.begin(), tree.end(), '>') ==
          static_cast<long>(g.vertices.size()) - 1);
}

TEST_CASE("orbit json") {
    const json j = orbit_to_json(orbit(Tableau({{1, 1, 2}, {3, 4}}, 3)));
    CHECK(j.at("b") == 3);
    CHECK(j.at("b_prime") == 4);
    CHECK(j.at("members").size() == 4);
    CHECK(tableau_from_json(j.at("representative")) == Tableau({{1, 1, 2}, {3, 4}}, 3));
}
