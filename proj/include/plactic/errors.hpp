#pragma once

#include <stdexcept>
#include <string>

namespace plactic {

// Domain errors map to CLI exit code 1; they signal caller mistakes
// (mismatched sizes, infeasible shapes), never internal bugs.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct size_mismatch : domain_error {
    using domain_error::domain_error;
};

struct shape_infeasible : domain_error {
    using domain_error::domain_error;
};

struct k_too_small : domain_error {
    using domain_error::domain_error;
};

struct row_tableau_error : domain_error {
    using domain_error::domain_error;
};

struct not_decreasing : domain_error {
    using domain_error::domain_error;
};

// Integrality of the orbit mean is a theorem; a violation means the
// implementation is broken, so this derives from logic_error.
struct non_integer_mean : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace plactic
