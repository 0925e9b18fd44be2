#include "plactic/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "plactic/errors.hpp"

namespace plactic {

Orbit orbit(const Tableau& t) {
    std::set<Tableau> seen{t};
    std::deque<Tableau> frontier{t};
    while (!frontier.empty()) {
        Tableau cur = frontier.front();
        frontier.pop_front();
        for (int i = 1; i <= t.rank(); ++i) {
            Tableau img = sigma(i, cur);
            if (seen.insert(img).second)
                frontier.push_back(img);
        }
    }
    Orbit o;
    o.members.assign(seen.begin(), seen.end());
    bool found = false;
    for (const Tableau& m : o.members)
        if (is_dominant(m.weight())) {
            o.representative = m;
            found = true;
            break;
        }
    if (!found)
        throw std::logic_error("orbit: no dominant-weight member");
    return o;
}

std::vector<Orbit> orbit_decomposition(const Partition& lambda, int rank) {
    std::vector<Orbit> out;
    std::set<Tableau> taken;
    for (const Tableau& t : enumerate_tableaux(lambda, rank)) {
        if (taken.count(t))
            continue;
        Orbit o = orbit(t);
        taken.insert(o.members.begin(), o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<Tableau> fixed_points(const Partition& lambda, int rank) {
    std::vector<Tableau> out;
    for (const Tableau& t : enumerate_tableaux(lambda, rank)) {
        bool fixed = true;
        for (int i = 1; i <= rank && fixed; ++i)
            fixed = sigma(i, t) == t;
        if (fixed)
            out.push_back(t);
    }
    return out;
}

namespace {

long long orbit_mean(const Tableau& t, long long (*stat)(const Tableau&), const char* what) {
    Orbit o = orbit(t);
    long long sum = 0;
    for (const Tableau& m : o.members)
        sum += stat(m);
    const long long size = static_cast<long long>(o.members.size());
    if (sum % size != 0)
        throw non_integer_mean(std::string(what) + ": orbit mean is not an integer");
    return sum / size;
}

} // namespace

long long mean_b(const Tableau& t) {
    return orbit_mean(t, &d_stat, "mean_b");
}

long long mean_bprime(const Tableau& t) {
    return orbit_mean(t, &dprime_stat, "mean_bprime");
}

CheckReport moore_coxeter_check(const Partition& lambda, int rank) {
    CheckReport rep;
    for (const Tableau& t : enumerate_tableaux(lambda, rank)) {
        for (int i = 1; i <= rank; ++i) {
            if (sigma(i, sigma(i, t)) != t) {
                rep.ok = false;
                rep.counterexample = "sigma_" + std::to_string(i) +
                                     " not involutive at " + to_string(row_reading(t));
                return rep;
            }
            for (int j = i + 2; j <= rank; ++j)
                if (sigma(i, sigma(j, t)) != sigma(j, sigma(i, t))) {
                    rep.ok = false;
                    rep.counterexample = "sigma_" + std::to_string(i) + ", sigma_" +
                                         std::to_string(j) + " do not commute at " +
                                         to_string(row_reading(t));
                    return rep;
                }
            if (i + 1 <= rank) {
                Tableau lhs = sigma(i, sigma(i + 1, sigma(i, t)));
                Tableau rhs = sigma(i + 1, sigma(i, sigma(i + 1, t)));
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.counterexample = "braid relation fails for i=" + std::to_string(i) +
                                         " at " + to_string(row_reading(t));
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::vector<Chain> chain_decompose(const Orbit& o) {
    auto first_letter = [](const Tableau& t) {
        return t.size() == 0 ? 0 : row_reading(t).letters.front();
    };
    std::map<Tableau, Tableau> next;
    std::set<Tableau> has_incoming;
    for (const Tableau& u : o.members) {
        const int f = first_letter(u);
        const int i = f - 1;
        if (i < 1 || i > u.rank())
            continue;
        Tableau v = sigma(i, u);
        if (v != u && first_letter(v) == i) {
            next.emplace(u, v);
            has_incoming.insert(v);
        }
    }
    std::vector<Chain> chains;
    for (const Tableau& head : o.members) {
        if (has_incoming.count(head))
            continue;
        Chain c{head};
        auto it = next.find(head);
        while (it != next.end()) {
            c.push_back(it->second);
            it = next.find(it->second);
        }
        chains.push_back(std::move(c));
    }
    return chains;
}

} // namespace plactic
