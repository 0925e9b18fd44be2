#include "plactic/qpoly.hpp"

namespace plactic {

QPolynomial QPolynomial::monomial(int exponent, long long coeff) {
    QPolynomial p;
    p.add(exponent, coeff);
    return p;
}

long long QPolynomial::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

int QPolynomial::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

void QPolynomial::add(int exponent, long long coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
    if (!inserted && (it->second += coeff) == 0)
        coeffs_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (auto [e, c] : o.coeffs_)
        add(e, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (auto [e, c] : o.coeffs_)
        add(e, -c);
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial p;
    for (auto [ea, ca] : a.coeffs_)
        for (auto [eb, cb] : b.coeffs_)
            p.add(ea + eb, ca * cb);
    return p;
}

long long QPolynomial::evaluate_at_one() const {
    long long s = 0;
    for (auto [e, c] : coeffs_)
        s += c;
    return s;
}

bool QPolynomial::nonnegative() const {
    for (auto [e, c] : coeffs_)
        if (c < 0)
            return false;
    return true;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (auto [e, c] : coeffs_) {
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0)
            s += std::to_string(a);
        if (e == 1)
            s += "q";
        else if (e > 1)
            s += "q^" + std::to_string(e);
    }
    return s;
}

} // namespace plactic
