#pragma once

#include <map>
#include <string>

namespace plactic {

// Polynomial in q with exact integer coefficients, sparse on exponents.
// Zero coefficients are never stored.
class QPolynomial {
public:
    QPolynomial() = default;
    static QPolynomial monomial(int exponent, long long coeff = 1);
    static QPolynomial one() { return monomial(0); }

    const std::map<int, long long>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long long coefficient(int exponent) const;
    int degree() const; // -1 for the zero polynomial

    void add(int exponent, long long coeff);

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    long long evaluate_at_one() const;
    bool nonnegative() const;

    std::string to_string() const; // "q^2 + q^3 + q^4", "0" for zero

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    std::map<int, long long> coeffs_;
};

} // namespace plactic
