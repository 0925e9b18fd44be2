#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Drives the built binary through popen and checks payloads, exit codes
// and byte-level determinism.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PLACTIC_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("crystal subcommand") {
    auto res = run_cli("crystal --shape 2,1 --rank 2 --format json");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j.at("vertices").size() == 8);
    for (const auto& e : j.at("edges")) {
        REQUIRE(e.size() == 3);
        int color = e[1].get<int>();
        CHECK(color >= 1);
        CHECK(color <= 2);
    }
    // round trip through the documented schema
    for (const auto& v : j.at("vertices")) {
        CHECK(v.contains("rows"));
        CHECK(v.at("rank") == 2);
    }

    auto dot = run_cli("crystal --shape 1 --rank 3 --format dot");
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("color=1") != std::string::npos);
    CHECK(dot.out.find("n3") != std::string::npos);

    CHECK(run_cli("crystal --shape 2,,1 --rank 2").exit_code == 2);
    CHECK(run_cli("crystal --shape 1,2 --rank 2").exit_code == 1);
}

TEST_CASE("kostka subcommand") {
    auto res = run_cli("kostka --shape 3,2 --weight 2,1,1,1 --rank 3 --method all");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j.at("q") == json{{"2", 1}, {"3", 1}, {"4", 1}});
    CHECK(j.at("agree") == true);

    auto self = run_cli("kostka --shape 2,1 --weight 2,1 --rank 2 --method lusztig");
    REQUIRE(self.exit_code == 0);
    CHECK(json::parse(self.out).at("q") == json{{"0", 1}});

    CHECK(run_cli("kostka --shape 3,2 --weight 2,1 --rank 2 --method all").exit_code == 1);
}

TEST_CASE("multi subcommand") {
    auto res = run_cli("multi --shape 3,3,2 --k 2 --rank 3");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j.at("vars") == 3);
    CHECK(j.at("terms").size() == 3);
    json exps = json::array();
    for (const auto& t : j.at("terms")) {
        CHECK(t.at("coef") == 1);
        exps.push_back(t.at("exp"));
    }
    CHECK(exps == json::parse("[[0,1,1],[1,0,1],[1,1,0]]"));
}

TEST_CASE("orbit and charge subcommands") {
    auto res = run_cli("orbit --rows 1,1,2/3,4 --rank 3");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j.at("members").size() == 4);
    CHECK(j.at("b") == 3);
    CHECK(j.at("representative").at("rows") == json::parse("[[1,1,2],[3,4]]"));

    auto ch = run_cli("charge --rows 1,1,2/3,4 --rank 3");
    REQUIRE(ch.exit_code == 0);
    CHECK(json::parse(ch.out).at("charge") == 4);
}

TEST_CASE("cyclage subcommand") {
    auto res = run_cli("cyclage --weight 2,2,1 --rank 2 --format json");
    REQUIRE(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j.at("vertices").size() == 7);
    auto dot = run_cli("cyclage --weight 2,2,1 --rank 2 --format dot --tree");
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.out.find("rank=same") != std::string::npos);
}

TEST_CASE("cplactic subcommand") {
    auto res = run_cli("cplactic --rank 1 --w1 1,-1 --w2 \"\"");
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.out).at("congruent") == "true");

    auto res2 = run_cli("cplactic --rank 2 --w1 1,-1,1 --w2 -2,2,1");
    REQUIRE(res2.exit_code == 0);
    CHECK(json::parse(res2.out).at("congruent") == "true");

    auto res3 = run_cli("cplactic --rank 2 --w1 1 --w2 2");
    REQUIRE(res3.exit_code == 0);
    CHECK(json::parse(res3.out).at("congruent") == "false");
}

TEST_CASE("verify subcommand") {
    auto list = run_cli("verify --list");
    REQUIRE(list.exit_code == 0);
    CHECK(list.out.find("kostka-threeway") != std::string::npos);

    auto res = run_cli("verify --suite kostka-threeway --max-size 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ok kostka-threeway") != std::string::npos);

    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("deterministic output") {
    for (const std::string args :
         {std::string("crystal --shape 2,2 --rank 3 --format json"),
          std::string("kostka --shape 4,2 --weight 2,2,2 --rank 2 --method all"),
          std::string("cyclage --weight 2,2,1 --rank 2 --format dot")}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}
