#include "plactic/multipoly.hpp"

#include <algorithm>

#include "plactic/errors.hpp"

namespace plactic {

MultiPolynomial MultiPolynomial::constant(int nvars, long long c) {
    MultiPolynomial p(nvars);
    p.add(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPolynomial MultiPolynomial::variable(int nvars, int var, int power) {
    if (var < 1 || var > nvars)
        throw domain_error("MultiPolynomial::variable: index out of range");
    MultiPolynomial p(nvars);
    std::vector<int> e(nvars, 0);
    e[var - 1] = power;
    p.add(e, 1);
    return p;
}

void MultiPolynomial::add(const std::vector<int>& exponents, long long coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw domain_error("MultiPolynomial::add: exponent vector length mismatch");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted && (it->second += coeff) == 0)
        terms_.erase(it);
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
    if (nvars_ != o.nvars_)
        throw domain_error("MultiPolynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
    if (nvars_ != o.nvars_)
        throw domain_error("MultiPolynomial: variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.nvars_ != b.nvars_)
        throw domain_error("MultiPolynomial: variable count mismatch");
    MultiPolynomial p(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i)
                e[i] = ea[i] + eb[i];
            p.add(e, ca * cb);
        }
    return p;
}

QPolynomial MultiPolynomial::specialize_principal() const {
    QPolynomial q;
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int i = 0; i < nvars_; ++i)
            deg += (i + 1) * e[i];
        q.add(deg, c);
    }
    return q;
}

MultiPolynomial MultiPolynomial::reverse_variables() const {
    MultiPolynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> rev(e.rbegin(), e.rend());
        p.add(rev, c);
    }
    return p;
}

std::string MultiPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        long long a = c < 0 ? -c : c;
        bool allzero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (a != 1 || allzero)
            s += std::to_string(a);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            s += "x" + std::to_string(i + 1);
            if (e[i] > 1)
                s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

} // namespace plactic
