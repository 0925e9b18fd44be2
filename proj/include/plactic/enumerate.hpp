#pragma once

#include <optional>
#include <vector>

#include "plactic/tableau.hpp"

namespace plactic {

// All semistandard fillings of the shape over {1..rank+1}, optionally of
// fixed weight. Emission order is lexicographic in the filling sequence
// read bottom row to top row, left to right; every consumer of tableau
// lists relies on this order being reproducible.
std::vector<Tableau> enumerate_tableaux(const Partition& shape, int rank,
                                        const std::optional<Weight>& weight = std::nullopt);

// Tab(., mu): all shapes of |mu| cells with at most rank+1 rows, shapes in
// partitions_of order, fillings in enumeration order within each shape.
std::vector<Tableau> tableaux_of_weight(const Weight& mu, int rank);

} // namespace plactic
