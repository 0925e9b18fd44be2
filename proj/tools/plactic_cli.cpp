// Command-line surface over the library. Exit codes: 0 success, 1 domain
// error, 2 parse error, 3 property violation from `verify`.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plactic/io.hpp"
#include "plactic/kostka.hpp"
#include "plactic/multivariate.hpp"
#include "plactic/typec.hpp"
#include "plactic/verify.hpp"

using namespace plactic;

namespace {

struct parse_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty())
        return out;
    std::size_t i = 0;
    while (i <= csv.size()) {
        std::size_t j = csv.find(',', i);
        if (j == std::string::npos)
            j = csv.size();
        const std::string tok = csv.substr(i, j - i);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw parse_failure("bad integer list '" + csv + "'");
        }
        if (used != tok.size())
            throw parse_failure("bad integer list '" + csv + "'");
        out.push_back(v);
        if (j == csv.size())
            break;
        i = j + 1;
        if (i == csv.size())
            throw parse_failure("bad integer list '" + csv + "'");
    }
    return out;
}

Partition parse_partition(const std::string& csv) {
    return Partition(parse_int_list(csv));
}

Weight parse_weight(const std::string& csv, int rank) {
    std::vector<int> w = parse_int_list(csv);
    if (static_cast<int>(w.size()) > rank + 1)
        throw domain_error("weight has more than rank+1 entries");
    w.resize(rank + 1, 0);
    for (int v : w)
        if (v < 0)
            throw domain_error("weight entries must be nonnegative");
    return w;
}

Tableau parse_tableau(const std::string& text, int rank) {
    // bottom row first, rows separated by '/', entries by ','
    std::vector<std::vector<int>> rows;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find('/', i);
        if (j == std::string::npos)
            j = text.size();
        rows.push_back(parse_int_list(text.substr(i, j - i)));
        i = j + 1;
    }
    return Tableau(std::move(rows), rank);
}

void emit(const json& j) {
    std::cout << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact plactic/crystal combinatorics"};
    app.require_subcommand(1);

    std::string shape_s, weight_s, rows_s, format = "json", method = "all";
    std::string w1_s, w2_s, suite = "all";
    int rank = 0, kk = 1, max_size = 6;
    std::size_t max_len = 10, max_states = 200000;
    bool tree_only = false, list_suites = false;

    auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph of a shape");
    crystal_cmd->add_option("--shape", shape_s)->required();
    crystal_cmd->add_option("--rank", rank)->required();
    crystal_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
    kostka_cmd->add_option("--shape", shape_s)->required();
    kostka_cmd->add_option("--weight", weight_s)->required();
    kostka_cmd->add_option("--rank", rank)->required();
    kostka_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"charge", "mean", "lusztig", "all"}));

    auto* multi_cmd = app.add_subcommand("multi", "multivariate rectangular-weight polynomial");
    multi_cmd->add_option("--shape", shape_s)->required();
    multi_cmd->add_option("--k", kk)->required();
    multi_cmd->add_option("--rank", rank)->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "reflection orbit of a tableau");
    orbit_cmd->add_option("--rows", rows_s)->required();
    orbit_cmd->add_option("--rank", rank)->required();

    auto* charge_cmd = app.add_subcommand("charge", "charge of a tableau");
    charge_cmd->add_option("--rows", rows_s)->required();
    charge_cmd->add_option("--rank", rank)->required();

    auto* cyclage_cmd = app.add_subcommand("cyclage", "cyclage graph of a weight");
    cyclage_cmd->add_option("--weight", weight_s)->required();
    cyclage_cmd->add_option("--rank", rank)->required();
    cyclage_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    cyclage_cmd->add_flag("--tree", tree_only, "keep only initial-cyclage arrows");

    auto* cplactic_cmd = app.add_subcommand("cplactic", "signed-alphabet congruence test");
    cplactic_cmd->add_option("--rank", rank)->required();
    cplactic_cmd->add_option("--w1", w1_s);
    cplactic_cmd->add_option("--w2", w2_s);
    cplactic_cmd->add_option("--max-len", max_len);
    cplactic_cmd->add_option("--max-states", max_states);

    auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_option("--max-size", max_size);
    verify_cmd->add_flag("--list", list_suites);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (crystal_cmd->parsed()) {
            CrystalGraph g = crystal_graph(parse_partition(shape_s), rank);
            if (format == "dot")
                std::cout << crystal_to_dot(g);
            else
                emit(crystal_to_json(g));
        } else if (kostka_cmd->parsed()) {
            const Partition lambda = parse_partition(shape_s);
            const Weight mu = parse_weight(weight_s, rank);
            if (method == "lusztig") {
                emit(qpoly_to_json(lusztig_kostka(lambda, mu, rank)));
            } else if (method == "charge") {
                emit(qpoly_to_json(charge_kostka(lambda, mu, rank)));
            } else if (method == "mean") {
                emit(qpoly_to_json(mean_kostka(lambda, mu, rank)));
            } else {
                const QPolynomial l = lusztig_kostka(lambda, mu, rank);
                const QPolynomial c = charge_kostka(lambda, mu, rank);
                const QPolynomial m = mean_kostka(lambda, mu, rank);
                json j = qpoly_to_json(l);
                j["agree"] = l == c && c == m;
                emit(j);
            }
        } else if (multi_cmd->parsed()) {
            emit(multipoly_to_json(bold_kostka(parse_partition(shape_s), kk, rank)));
        } else if (orbit_cmd->parsed()) {
            emit(orbit_to_json(orbit(parse_tableau(rows_s, rank))));
        } else if (charge_cmd->parsed()) {
            const Tableau t = parse_tableau(rows_s, rank);
            json j;
            j["charge"] = charge_any_weight(t);
            if (is_dominant(t.weight()))
                j["cocharge"] = cocharge(t);
            emit(j);
        } else if (cyclage_cmd->parsed()) {
            CyclageGraph g = cyclage_graph(parse_weight(weight_s, rank), rank);
            if (format == "dot")
                std::cout << cyclage_to_dot(g, tree_only);
            else
                emit(cyclage_to_json(g));
        } else if (cplactic_cmd->parsed()) {
            using namespace typec;
            const SignedWord a = parse_signed_word(w1_s, rank);
            const SignedWord b = parse_signed_word(w2_s, rank);
            json j;
            j["congruent"] = to_string(congruent(a, b, max_len, max_states));
            emit(j);
        } else if (verify_cmd->parsed()) {
            if (list_suites) {
                for (const Suite& s : verification_suites())
                    std::cout << s.name << "  " << s.description << "\n";
                return 0;
            }
            bool any = false;
            for (const Suite& s : verification_suites()) {
                if (suite != "all" && suite != s.name)
                    continue;
                any = true;
                std::string failure;
                if (s.run(max_size, failure)) {
                    std::cout << "ok " << s.name << "\n";
                } else {
                    std::cout << "FAIL " << s.name << "\n";
                    std::cerr << s.name << ": " << failure << "\n";
                    return 3;
                }
            }
            if (!any) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
        }
    } catch (const parse_failure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
