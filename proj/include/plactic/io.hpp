#pragma once

#include <string>

#include <json.hpp>

#include "plactic/crystal.hpp"
#include "plactic/cyclage.hpp"
#include "plactic/multipoly.hpp"
#include "plactic/orbits.hpp"
#include "plactic/qpoly.hpp"

namespace plactic {

using json = nlohmann::ordered_json;

// {"rows": [[...bottom row...], ...], "rank": n}
json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

// {"q": {"2": 1, "3": 1}} with exponents as decimal strings
json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const json& j);

// {"vars": n, "terms": [{"exp": [e1..en], "coef": c}, ...]} sorted by exponent vector
json multipoly_to_json(const MultiPolynomial& p);
MultiPolynomial multipoly_from_json(const json& j);

// {"vertices": [tableau...], "edges": [[source, color, target], ...]}
json crystal_to_json(const CrystalGraph& g);

// {"representative": tableau, "members": [...], "b": int, "b_prime": int}
json orbit_to_json(const Orbit& o);

json cyclage_to_json(const CyclageGraph& g);

// One node per tableau labeled by its row reading, edges carry color=i.
std::string crystal_to_dot(const CrystalGraph& g);

// Vertices grouped by cocharge through rank=same blocks; tree_only keeps
// just the initial-cyclage arrows.
std::string cyclage_to_dot(const CyclageGraph& g, bool tree_only = false);

} // namespace plactic
