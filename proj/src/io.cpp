#include "plactic/io.hpp"

#include <sstream>

namespace plactic {

json tableau_to_json(const Tableau& t) {
    json j;
    j["rows"] = t.rows();
    j["rank"] = t.rank();
    return j;
}

Tableau tableau_from_json(const json& j) {
    return Tableau(j.at("rows").get<std::vector<std::vector<int>>>(), j.at("rank").get<int>());
}

json qpoly_to_json(const QPolynomial& p) {
    json coeffs = json::object();
    for (auto [e, c] : p.coefficients())
        coeffs[std::to_string(e)] = c;
    json j;
    j["q"] = std::move(coeffs);
    return j;
}

QPolynomial qpoly_from_json(const json& j) {
    QPolynomial p;
    for (const auto& [e, c] : j.at("q").items())
        p.add(std::stoi(e), c.get<long long>());
    return p;
}

json multipoly_to_json(const MultiPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exp"] = e;
        term["coef"] = c;
        terms.push_back(std::move(term));
    }
    json j;
    j["vars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

MultiPolynomial multipoly_from_json(const json& j) {
    MultiPolynomial p(j.at("vars").get<int>());
    for (const auto& term : j.at("terms"))
        p.add(term.at("exp").get<std::vector<int>>(), term.at("coef").get<long long>());
    return p;
}

json crystal_to_json(const CrystalGraph& g) {
    json vertices = json::array();
    for (const Tableau& t : g.vertices)
        vertices.push_back(tableau_to_json(t));
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json::array({e.source, e.color, e.target}));
    json j;
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j;
}

json orbit_to_json(const Orbit& o) {
    json members = json::array();
    for (const Tableau& t : o.members)
        members.push_back(tableau_to_json(t));
    json j;
    j["representative"] = tableau_to_json(o.representative);
    j["members"] = std::move(members);
    j["b"] = mean_b(o.representative);
    j["b_prime"] = mean_bprime(o.representative);
    return j;
}

json cyclage_to_json(const CyclageGraph& g) {
    json vertices = json::array();
    for (const Tableau& t : g.vertices)
        vertices.push_back(tableau_to_json(t));
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json::array({e.source, e.letter, e.target, e.initial}));
    json j;
    j["weight"] = g.mu;
    j["vertices"] = std::move(vertices);
    j["cocharge"] = g.cocharges;
    j["edges"] = std::move(edges);
    return j;
}

std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    os << "  edge [colorscheme=set19];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        os << "  n" << v << " [label=\"" << to_string(row_reading(g.vertices[v])) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  n" << e.source << " -> n" << e.target << " [color=" << e.color
           << ", label=" << e.color << "];\n";
    os << "}\n";
    return os.str();
}

std::string cyclage_to_dot(const CyclageGraph& g, bool tree_only) {
    std::ostringstream os;
    os << "digraph cyclage {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        os << "  n" << v << " [label=\"" << to_string(row_reading(g.vertices[v]))
           << "\", cocharge=" << g.cocharges[v] << "];\n";
    int top = 0;
    for (int c : g.cocharges)
        top = std::max(top, c);
    for (int level = top; level >= 0; --level) {
        os << "  { rank=same;";
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (g.cocharges[v] == level)
                os << " n" << v << ";";
        os << " }\n";
    }
    for (const auto& e : g.edges) {
        if (tree_only && !e.initial)
            continue;
        os << "  n" << e.source << " -> n" << e.target << " [label=" << e.letter;
        if (!tree_only && !e.initial)
            os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace plactic
