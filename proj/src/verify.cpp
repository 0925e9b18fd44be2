#include "plactic/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "plactic/cyclage.hpp"
#include "plactic/enumerate.hpp"
#include "plactic/kostka.hpp"
#include "plactic/multivariate.hpp"
#include "plactic/orbits.hpp"
#include "plactic/typec.hpp"

namespace plactic {

namespace {

std::vector<Word> all_words(int rank, int max_len) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty())
            out.push_back(Word{cur, rank});
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int l = 1; l <= rank + 1; ++l) {
            cur.push_back(l);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

// all weight vectors of length rank+1 summing to m
std::vector<Weight> weights_of(int m, int rank) {
    std::vector<Weight> out;
    Weight cur(rank + 1, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == rank) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, m);
    return out;
}

bool suite_core_knuth(int max_size, std::string& failure) {
    const int cap = std::min(max_size, 8);
    for (int rank = 1; rank <= 3; ++rank) {
        const int len = cap;
        for (const Word& w : all_words(rank, len))
            if (!knuth_equivalent(w, row_reading(insertion_tableau(w)))) {
                failure = "word " + to_string(w) + " not equivalent to its tableau reading";
                return false;
            }
    }
    return true;
}

bool suite_core_associative(int max_size, std::string& failure) {
    const int len = std::min(max_size, 4);
    auto words = all_words(2, len);
    std::vector<Tableau> ts;
    ts.reserve(words.size());
    for (const Word& w : words)
        ts.push_back(insertion_tableau(w));
    for (std::size_t a = 0; a < ts.size(); a += 5)
        for (std::size_t b = 0; b < ts.size(); b += 7)
            for (std::size_t c = 0; c < ts.size(); c += 9)
                if (plactic_product(plactic_product(ts[a], ts[b]), ts[c]) !=
                    plactic_product(ts[a], plactic_product(ts[b], ts[c]))) {
                    failure = "associativity fails at words " + to_string(words[a]) + ", " +
                              to_string(words[b]) + ", " + to_string(words[c]);
                    return false;
                }
    return true;
}

bool suite_crystal_compat(int max_size, std::string& failure) {
    const int len = std::min(max_size, 6);
    std::map<Tableau, std::vector<Word>> classes;
    for (const Word& w : all_words(2, len))
        classes[insertion_tableau(w)].push_back(w);
    for (const auto& [p, members] : classes) {
        const Word& rep = members.front();
        for (int i = 1; i <= 2; ++i) {
            auto er = eps(i, rep);
            auto pr = phi(i, rep);
            const Tableau sr = insertion_tableau(sigma(i, rep));
            for (const Word& w : members) {
                auto ew = eps(i, w);
                if (ew.has_value() != er.has_value() ||
                    (ew && insertion_tableau(*ew) != insertion_tableau(*er))) {
                    failure = "eps_" + std::to_string(i) + " not plactic at " + to_string(w);
                    return false;
                }
                auto pw = phi(i, w);
                if (pw.has_value() != pr.has_value() ||
                    (pw && insertion_tableau(*pw) != insertion_tableau(*pr))) {
                    failure = "phi_" + std::to_string(i) + " not plactic at " + to_string(w);
                    return false;
                }
                if (insertion_tableau(sigma(i, w)) != sr) {
                    failure = "sigma_" + std::to_string(i) + " not plactic at " + to_string(w);
                    return false;
                }
            }
        }
    }
    return true;
}

bool suite_crystal_strings(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                CrystalGraph g = crystal_graph(lambda, rank);
                if (!is_connected(g)) {
                    failure = "graph of " + lambda.to_string() + " rank " +
                              std::to_string(rank) + " disconnected";
                    return false;
                }
                std::map<std::pair<int, int>, int> outd, ind;
                for (const auto& e : g.edges)
                    if (++outd[{e.source, e.color}] > 1 || ++ind[{e.target, e.color}] > 1) {
                        failure = "colour " + std::to_string(e.color) +
                                  " not a union of paths on " + lambda.to_string();
                        return false;
                    }
            }
    return true;
}

bool suite_crystal_reversal(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                CrystalGraph g = crystal_graph(lambda, rank);
                std::set<std::tuple<Tableau, int, Tableau>> edges;
                for (const auto& e : g.edges)
                    edges.insert({g.vertices[e.source], e.color, g.vertices[e.target]});
                for (const auto& [s, i, t] : edges)
                    if (!edges.count({reverse_complement(t), rank + 1 - i, reverse_complement(s)})) {
                        failure = "arrow reversal fails on " + lambda.to_string() + " rank " +
                                  std::to_string(rank);
                        return false;
                    }
            }
    return true;
}

bool suite_orbit_partition(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                auto orbits = orbit_decomposition(lambda, rank);
                std::set<Tableau> seen;
                std::size_t total = 0;
                for (const Orbit& o : orbits) {
                    total += o.members.size();
                    seen.insert(o.members.begin(), o.members.end());
                    for (const Tableau& t : o.members)
                        if (orbit(t).members != o.members) {
                            failure = "orbit not an equivalence class at " +
                                      to_string(row_reading(t));
                            return false;
                        }
                }
                if (seen.size() != total || seen.size() != enumerate_tableaux(lambda, rank).size()) {
                    failure = "orbits of " + lambda.to_string() + " do not partition Tab";
                    return false;
                }
            }
    return true;
}

bool suite_orbit_count(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                auto orbits = orbit_decomposition(lambda, rank);
                for (const Partition& mup : partitions_of(m, rank + 1)) {
                    Weight mu(rank + 1, 0);
                    for (int i = 0; i < mup.length(); ++i)
                        mu[i] = mup.part(i);
                    std::size_t hits = 0;
                    for (const Orbit& o : orbits)
                        if (o.representative.weight() == mu)
                            ++hits;
                    if (hits != enumerate_tableaux(lambda, rank, mu).size()) {
                        failure = "orbit count != K at shape " + lambda.to_string() +
                                  " weight " + mup.to_string();
                        return false;
                    }
                }
            }
    return true;
}

bool suite_orbit_charge(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1))
                for (const Orbit& o : orbit_decomposition(lambda, rank)) {
                    const long long c = charge_any_weight(o.representative);
                    for (const Tableau& t : o.members)
                        if (charge_any_weight(t) != c) {
                            failure = "charge not constant on the orbit of " +
                                      to_string(row_reading(o.representative));
                            return false;
                        }
                }
    return true;
}

bool suite_chain_cyclage(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                if (lambda.length() <= 1)
                    continue; // initial cyclage undefined on rows
                for (const Orbit& o : orbit_decomposition(lambda, rank))
                    for (const Chain& chain : chain_decompose(o)) {
                        long long before = 0, after = 0;
                        for (const Tableau& u : chain) {
                            before += dprime_stat(u);
                            after += dprime_stat(initial_cyclage(u));
                        }
                        if (after != before + static_cast<long long>(chain.size())) {
                            failure = "chain mean fails at head " +
                                      to_string(row_reading(chain.front()));
                            return false;
                        }
                    }
            }
    return true;
}

bool suite_cyclage_graded(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 2; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& mup : partitions_of(m, rank + 1)) {
                Weight mu(rank + 1, 0);
                for (int i = 0; i < mup.length(); ++i)
                    mu[i] = mup.part(i);
                CyclageGraph g = cyclage_graph(mu, rank);
                int sinks = 0;
                std::vector<int> outdeg(g.vertices.size(), 0);
                for (const auto& e : g.edges) {
                    ++outdeg[e.source];
                    if (g.cocharges[e.target] != g.cocharges[e.source] - 1) {
                        failure = "cyclage edge does not drop cocharge by 1 in H_" +
                                  mup.to_string();
                        return false;
                    }
                }
                for (std::size_t v = 0; v < g.vertices.size(); ++v) {
                    if (outdeg[v] == 0) {
                        ++sinks;
                        if (g.vertices[v] != row_tableau(mu, rank)) {
                            failure = "sink of H_" + mup.to_string() + " is not the row tableau";
                            return false;
                        }
                    }
                    if (g.cocharges[v] < 0 || g.cocharges[v] > weight_norm(mu)) {
                        failure = "cocharge out of range in H_" + mup.to_string();
                        return false;
                    }
                    if (charge(g.vertices[v]) + g.cocharges[v] != weight_norm(mu)) {
                        failure = "charge + cocharge != ||mu|| in H_" + mup.to_string();
                        return false;
                    }
                }
                if (sinks != 1) {
                    failure = "H_" + mup.to_string() + " has " + std::to_string(sinks) + " sinks";
                    return false;
                }
                // spanning tree: the initial arrows reach the root from everywhere
                auto parent = cyclage_tree(g);
                for (std::size_t v = 0; v < g.vertices.size(); ++v) {
                    int cur = static_cast<int>(v), hops = 0;
                    while (parent[cur] != -1 && hops <= static_cast<int>(g.vertices.size())) {
                        cur = parent[cur];
                        ++hops;
                    }
                    if (g.vertices[cur] != row_tableau(mu, rank)) {
                        failure = "initial-cyclage tree of H_" + mup.to_string() +
                                  " does not span";
                        return false;
                    }
                }
            }
    return true;
}

bool suite_cyclage_sigma(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 2; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                if (lambda.length() <= 1)
                    continue;
                for (const Tableau& t : enumerate_tableaux(lambda, rank))
                    for (int i = 1; i <= rank; ++i)
                        if (sigma(i, initial_cyclage(t)) != initial_cyclage(sigma(i, t))) {
                            failure = "sigma_" + std::to_string(i) +
                                      " does not commute with cyclage at " +
                                      to_string(row_reading(t));
                            return false;
                        }
            }
    return true;
}

bool suite_charge_weight_order(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 6); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1)) {
                std::map<Weight, QPolynomial> by_sorted;
                for (const Weight& mu : weights_of(m, rank)) {
                    QPolynomial k;
                    for (const Tableau& t : enumerate_tableaux(lambda, rank, mu))
                        k.add(static_cast<int>(charge_any_weight(t)), 1);
                    Weight sorted = mu;
                    std::sort(sorted.rbegin(), sorted.rend());
                    auto [it, fresh] = by_sorted.try_emplace(sorted, k);
                    if (!fresh && it->second != k) {
                        failure = "charge generating function depends on weight order at shape " +
                                  lambda.to_string() + " weight " + weight_to_string(mu);
                        return false;
                    }
                }
            }
    return true;
}

bool suite_kostka_threeway(int max_size, std::string& failure) {
    auto run_range = [&](int rank, int mmax) -> bool {
        for (int m = 1; m <= mmax; ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1))
                for (const Partition& mup : partitions_of(m, rank + 1)) {
                    Weight mu(rank + 1, 0);
                    for (int i = 0; i < mup.length(); ++i)
                        mu[i] = mup.part(i);
                    const QPolynomial a = lusztig_kostka(lambda, mu, rank);
                    const QPolynomial b = charge_kostka(lambda, mu, rank);
                    const QPolynomial c = mean_kostka(lambda, mu, rank);
                    if (a != b || b != c) {
                        failure = "three-way disagreement at shape " + lambda.to_string() +
                                  " weight " + mup.to_string() + " rank " + std::to_string(rank) +
                                  ": lusztig=" + a.to_string() + " charge=" + b.to_string() +
                                  " mean=" + c.to_string();
                        return false;
                    }
                    if (a.evaluate_at_one() !=
                        static_cast<long long>(enumerate_tableaux(lambda, rank, mu).size())) {
                        failure = "K(1) != |Tab| at shape " + lambda.to_string() + " weight " +
                                  mup.to_string();
                        return false;
                    }
                    if (!a.nonnegative()) {
                        failure = "negative coefficient at shape " + lambda.to_string() +
                                  " weight " + mup.to_string();
                        return false;
                    }
                }
        return true;
    };
    for (int rank = 1; rank <= 3; ++rank)
        if (!run_range(rank, std::min(max_size, 8)))
            return false;
    return run_range(4, std::min(max_size, 6));
}

bool suite_kostka_dominance(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= std::min(max_size, 7); ++m)
            for (const Partition& lambda : partitions_of(m, rank + 1))
                for (const Partition& mup : partitions_of(m, rank + 1)) {
                    Weight mu(rank + 1, 0);
                    for (int i = 0; i < mup.length(); ++i)
                        mu[i] = mup.part(i);
                    bool dominates = true;
                    int pl = 0, pm = 0;
                    for (int i = 0; i <= rank; ++i) {
                        pl += lambda.part(i);
                        pm += mu[i];
                        if (pl < pm)
                            dominates = false;
                    }
                    const bool nonzero = !lusztig_kostka(lambda, mu, rank).is_zero();
                    if (nonzero && !dominates) {
                        failure = "K nonzero without dominance at shape " + lambda.to_string() +
                                  " weight " + mup.to_string();
                        return false;
                    }
                }
    return true;
}

bool suite_multi_theorem4(int max_size, std::string& failure) {
    const int cap = std::min(max_size, 4);
    for (int rank = 1; rank <= 3; ++rank)
        for (int m = 1; m <= cap; ++m)
            for (const Partition& alpha : partitions_of(m, rank + 1))
                for (const Partition& beta : partitions_of(m, rank)) {
                    if (alpha.length() + beta.length() > rank + 1)
                        continue;
                    const int k = std::max(alpha.part(0), beta.part(0));
                    const MultiPolynomial ab =
                        bold_kostka(build_lambda(alpha, beta, k, rank), k, rank);
                    const MultiPolynomial ba =
                        bold_kostka(build_lambda(beta, alpha, k, rank), k, rank);
                    if (ab != ba) {
                        failure = "swap symmetry fails at alpha=" + alpha.to_string() +
                                  " beta=" + beta.to_string() + " rank " + std::to_string(rank);
                        return false;
                    }
                    if (alpha.length() <= 1 && ab != schur_poly(beta, rank)) {
                        failure = "row-alpha Schur identity fails at beta=" + beta.to_string();
                        return false;
                    }
                    if (beta.length() <= 1 && ab != schur_poly(alpha, rank)) {
                        failure = "row-beta Schur identity fails at alpha=" + alpha.to_string();
                        return false;
                    }
                }
    return true;
}

bool suite_multi_pair_symmetry(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 1; k * (rank + 1) <= std::min(max_size, 12); ++k)
            for (const Partition& lambda : partitions_of(k * (rank + 1), rank + 1)) {
                const MultiPolynomial p = bold_kostka(lambda, k, rank);
                if (p != p.reverse_variables()) {
                    failure = "complementary-pair symmetry fails at " + lambda.to_string();
                    return false;
                }
            }
    return true;
}

bool suite_multi_specialize(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 1; k * (rank + 1) <= std::min(max_size, 12); ++k)
            for (const Partition& lambda : partitions_of(k * (rank + 1), rank + 1)) {
                Weight mu(rank + 1, k);
                if (specialize(bold_kostka(lambda, k, rank)) !=
                    lusztig_kostka(lambda, mu, rank)) {
                    failure = "specialization mismatch at " + lambda.to_string() + " k=" +
                              std::to_string(k) + " rank " + std::to_string(rank);
                    return false;
                }
            }
    return true;
}

bool suite_multi_stability(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 1; k * (rank + 1) <= std::min(max_size, 12); ++k)
            for (const Partition& lambda : partitions_of(k * (rank + 1), rank + 1))
                for (int r = 1; r <= 2; ++r)
                    if (!stability_check(lambda, k, r, rank)) {
                        failure = "stability fails at " + lambda.to_string() + " k=" +
                                  std::to_string(k) + " r=" + std::to_string(r);
                        return false;
                    }
    return true;
}

bool suite_multi_completion(int max_size, std::string& failure) {
    for (int rank = 1; rank <= 3; ++rank)
        for (int k = 1; k * (rank + 1) <= std::min(max_size, 8); ++k)
            for (const Partition& lambda : partitions_of(k * (rank + 1), rank + 1)) {
                Weight mu(rank + 1, k);
                for (const Tableau& t : enumerate_tableaux(lambda, rank, mu)) {
                    auto [u, nu] = completion(t, k);
                    if (!is_yamanouchi(u) || !is_yamanouchi(plactic_product(t, u))) {
                        failure = "completion not Yamanouchi at " + to_string(row_reading(t));
                        return false;
                    }
                    const Partition nuc = conjugate(nu);
                    std::vector<int> expected;
                    const auto d = string_exponents(t);
                    for (int i = rank; i >= 1; --i)
                        for (int rep = 0; rep < d[i - 1]; ++rep)
                            expected.push_back(i);
                    if (nuc.parts() != expected) {
                        failure = "conjugate weight of the completion disagrees with the "
                                  "exponents at " +
                                  to_string(row_reading(t));
                        return false;
                    }
                }
            }
    return true;
}

bool suite_multi_standard_weight(int max_size, std::string& failure) {
    for (int rank = 1; rank <= std::min(max_size, 3); ++rank) {
        IdentityReport rep = standard_weight_identity(rank);
        if (!rep.ok) {
            failure = rep.counterexample;
            return false;
        }
    }
    return true;
}

bool suite_typec_weight(int max_size, std::string& failure) {
    using namespace typec;
    const std::size_t max_len = std::min(max_size, 8);
    for (int rank = 1; rank <= 2; ++rank) {
        std::vector<SignedWord> seeds;
        seeds.push_back(SignedWord{{}, rank});
        seeds.push_back(SignedWord{{1, -1}, rank});
        seeds.push_back(SignedWord{{1, -1, 1}, rank});
        if (rank >= 2) {
            seeds.push_back(SignedWord{{-2, 2, 1}, rank});
            seeds.push_back(SignedWord{{2, 1, -1, -2}, rank});
        }
        for (const SignedWord& seed : seeds) {
            const auto target = signed_weight(seed);
            std::set<SignedWord> seen{seed};
            std::vector<SignedWord> frontier{seed};
            while (!frontier.empty() && seen.size() < 20000) {
                std::vector<SignedWord> next;
                for (const SignedWord& w : frontier)
                    for (const SignedWord& v : neighbors(w)) {
                        if (v.letters.size() > max_len)
                            continue;
                        if (signed_weight(v) != target) {
                            failure = "signed weight changes from " + to_string(w) + " to " +
                                      to_string(v);
                            return false;
                        }
                        if (seen.insert(v).second)
                            next.push_back(v);
                    }
                frontier = std::move(next);
            }
        }
    }
    return true;
}

bool suite_typec_symmetry(int max_size, std::string& failure) {
    using namespace typec;
    const std::size_t max_len = std::min(max_size, 6);
    // closure membership is symmetric within equal bounds
    std::vector<SignedWord> ws = {
        SignedWord{{1, -1}, 2},       SignedWord{{-2, 2, 1}, 2}, SignedWord{{1, -1, 1}, 2},
        SignedWord{{2, -2}, 2},       SignedWord{{}, 2},         SignedWord{{1, 2}, 2},
        SignedWord{{2, 1, -1, -2}, 2}};
    for (const SignedWord& a : ws)
        for (const SignedWord& b : ws) {
            Verdict ab = congruent(a, b, max_len, 20000);
            Verdict ba = congruent(b, a, max_len, 20000);
            if (ab != ba) {
                failure = "congruence verdict asymmetric between " + to_string(a) + " and " +
                          to_string(b);
                return false;
            }
        }
    for (const SignedWord& a : ws) {
        if (!strictly_decreasing(a))
            continue;
        SignedWord e = erase_pairs(a);
        if (erase_pairs(e) != e) {
            failure = "erasure not a fixpoint on " + to_string(a);
            return false;
        }
    }
    return true;
}

} // namespace

const std::vector<Suite>& verification_suites() {
    static const std::vector<Suite> suites = {
        {"core-knuth", "words are equivalent to their insertion tableau readings",
         suite_core_knuth},
        {"core-assoc", "plactic product is associative", suite_core_associative},
        {"crystal-compat", "crystal operators descend to the plactic quotient",
         suite_crystal_compat},
        {"crystal-strings", "graphs are connected and each colour splits into paths",
         suite_crystal_strings},
        {"crystal-reversal", "reversing arrows and complementing colours is a symmetry",
         suite_crystal_reversal},
        {"orbit-partition", "sigma-orbits partition each Tab(shape, .)", suite_orbit_partition},
        {"orbit-count", "orbits with dominant representative of weight mu count Tab(shape, mu)",
         suite_orbit_count},
        {"orbit-charge", "charge is constant along orbits", suite_orbit_charge},
        {"orbit-chain-cyclage", "initial cyclage raises chain means of the dual statistic by 1",
         suite_chain_cyclage},
        {"cyclage-graded", "cyclage graphs are graded with the row tableau as unique sink",
         suite_cyclage_graded},
        {"cyclage-sigma", "initial cyclage commutes with the reflections", suite_cyclage_sigma},
        {"charge-weight-order", "charge generating function ignores the ordering of the weight",
         suite_charge_weight_order},
        {"kostka-threeway", "alternating sum, charge and orbit-mean polynomials agree",
         suite_kostka_threeway},
        {"kostka-dominance", "nonzero polynomials only below the shape in dominance order",
         suite_kostka_dominance},
        {"multi-theorem4", "glued shapes give Schur polynomials and swap symmetry",
         suite_multi_theorem4},
        {"multi-pair-symmetry", "invariance under reversing the variable order",
         suite_multi_pair_symmetry},
        {"multi-specialize", "x_i = q^i recovers the one-variable polynomials",
         suite_multi_specialize},
        {"multi-stability", "adding full columns does not change the polynomial",
         suite_multi_stability},
        {"multi-completion", "completing tableau is Yamanouchi and encodes the exponents",
         suite_multi_completion},
        {"multi-standard-weight", "standard-weight expansion as an exact polynomial identity",
         suite_multi_standard_weight},
        {"cplactic-weight", "signed weight is invariant across rewriting closures",
         suite_typec_weight},
        {"cplactic-symmetry", "closure membership is symmetric and erasure is a fixpoint",
         suite_typec_symmetry},
    };
    return suites;
}

} // namespace plactic
