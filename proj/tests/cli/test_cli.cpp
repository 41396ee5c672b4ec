#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "starrees/groebner.hpp"
#include "starrees/rees_height2.hpp"
#include "starrees/star_config.hpp"

using namespace starrees;
using json = nlohmann::json;

namespace {
struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kExample = R"({"U": [[1,0],[1,1],[1,2],[1,3]]})";

std::vector<std::string> body_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream s(text);
    std::string line;
    while (std::getline(s, line))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}
} // namespace

TEST_CASE("rees equations prints parseable polynomials", "[cli]") {
    auto r = run({"rees", "equations"}, kExample);
    REQUIRE(r.code == cli::kOk);
    auto lines = body_lines(r.out);
    REQUIRE(lines.size() == 9);
    StarConfig cfg(ScalarMatrix::from_ints(Field::rationals(), {{1, 0}, {1, 1}, {1, 2}, {1, 3}}), 2);
    RingPtr R = cfg.rees_ring();
    std::vector<Poly> parsed;
    for (const auto& l : lines) parsed.push_back(Poly::parse(R, l));
    auto eq = rees_defining_ideal(cfg, R);
    auto want = eq.linear;
    want.insert(want.end(), eq.fiber.begin(), eq.fiber.end());
    CHECK(parsed == want);
}

TEST_CASE("json output", "[cli]") {
    auto r = run({"--json", "rees", "primary", "-"}, kExample);
    REQUIRE(r.code == cli::kOk);
    json doc = json::parse(r.out);
    CHECK(doc["confirmed"] == true);
    CHECK(doc["Q"] == json::array({"T1", "T5"}));
    CHECK(doc["P"].size() == 4);
    // flag after the subcommand works too
    auto r2 = run({"rees", "minors", "--json"}, kExample);
    REQUIRE(r2.code == cli::kOk);
    CHECK(json::parse(r2.out)["closed_form"].size() == 5);
}

TEST_CASE("forms are normalized", "[cli]") {
    auto r = run({"--json", "star", "check", "--gn"}, R"({"forms": ["x1+x2+x3+x4", "x1", "x2", "x3", "x4", "x2+2*x3+3*x4"]})");
    REQUIRE(r.code == cli::kOk);
    json doc = json::parse(r.out);
    CHECK(doc["config"]["n"] == 4);
    CHECK(doc["G_n"]["holds"] == false);
    CHECK(doc["config"]["normalized"] == true);
}

TEST_CASE("false answers are not failures", "[cli]") {
    auto r = run({"star", "check", "--linear-type"}, kExample);
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("linear type: false") != std::string::npos);
}

TEST_CASE("input errors carry a location", "[cli]") {
    auto bad_json = run({"rees", "dual"}, R"({"U": [[1,x]]})");
    CHECK(bad_json.code == cli::kInputError);
    CHECK(bad_json.err.find("line 1") != std::string::npos);
    auto ragged = run({"rees", "dual"}, R"({"U": [[1,0],[1]]})");
    CHECK(ragged.code == cli::kInputError);
    CHECK(ragged.err.find("U[1]") != std::string::npos);
    auto entry = run({"rees", "dual"}, R"({"U": [[1,"1/0"]]})");
    CHECK(entry.code == cli::kInputError);
    CHECK(entry.err.find("U[0][1]") != std::string::npos);
    auto form = run({"star", "gens"}, R"({"forms": ["x1", "x2^2"]})");
    CHECK(form.code == cli::kInputError);
    CHECK(form.err.find("forms[1]") != std::string::npos);
    auto unknown = run({"star", "gens"}, R"({"U": [[1]], "colour": 1})");
    CHECK(unknown.code == cli::kInputError);
    CHECK(run({"nonsense"}).code == cli::kInputError);
    CHECK(run({"verify", "--suite", "no-such-suite"}).code == cli::kInputError);
}

TEST_CASE("height three is refused for Rees output", "[cli]") {
    auto r = run({"rees", "equations"}, R"({"U": [[1,0],[1,1],[1,2],[1,3]], "c": 3})");
    CHECK(r.code == cli::kInputError);
    CHECK(r.err.find("c = 2") != std::string::npos);
}

TEST_CASE("taylor equations", "[cli]") {
    auto r = run({"--json", "taylor", "equations", "--t", "4", "--c", "3", "--m", "1"});
    REQUIRE(r.code == cli::kOk);
    json doc = json::parse(r.out);
    CHECK(doc["generators"].size() == 6);
    CHECK(doc["quadrics"].size() == 3);
}

TEST_CASE("verify", "[cli]") {
    auto list = run({"verify", "--list"});
    CHECK(list.code == cli::kOk);
    CHECK(list.out.find("worked-example") != std::string::npos);
    auto r = run({"verify", "--suite", "worked-example"});
    CHECK(r.code == cli::kOk);
    // same seed, same bytes
    CHECK(run({"verify", "--suite", "minors-closed-form", "--seed", "5"}).out ==
          run({"verify", "--suite", "minors-closed-form", "--seed", "5"}).out);
}

TEST_CASE("small characteristic warning", "[cli]") {
    auto r = run({"rees", "dual"}, R"({"field": "Fp:7", "U": [[1,0],[1,1],[1,2],[1,3]]})");
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("warning: small characteristic") != std::string::npos);
}

TEST_CASE("resource limits map to their own exit code", "[cli]") {
    setenv("STARREES_GB_MAX_BASIS", "2", 1);
    auto r = run({"rees", "primary"}, kExample);
    unsetenv("STARREES_GB_MAX_BASIS");
    CHECK(r.code == cli::kResource);
    CHECK(r.err.find("resource") != std::string::npos);
}
