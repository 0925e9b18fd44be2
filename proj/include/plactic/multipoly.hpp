#pragma once

#include <map>
#include <string>
#include <vector>

#include "plactic/qpoly.hpp"

namespace plactic {

// Polynomial in x_1..x_nvars with integer coefficients, keyed by exponent
// vectors of fixed length nvars. No zero coefficients stored.
class MultiPolynomial {
public:
    MultiPolynomial() = default;
    explicit MultiPolynomial(int nvars) : nvars_(nvars) {}
    static MultiPolynomial constant(int nvars, long long c);
    // x_var (1-based) to the given power
    static MultiPolynomial variable(int nvars, int var, int power = 1);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const std::vector<int>& exponents, long long coeff);

    MultiPolynomial& operator+=(const MultiPolynomial& o);
    MultiPolynomial& operator-=(const MultiPolynomial& o);
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);

    // x_i := q^i
    QPolynomial specialize_principal() const;

    // simultaneous x_i <-> x_{nvars+1-i}
    MultiPolynomial reverse_variables() const;

    std::string to_string() const;

    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, long long> terms_;
};

} // namespace plactic
