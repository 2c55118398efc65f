#include "mvtop/cli/cli.hpp"
#include "mvtop/cli/scenario.hpp"
#include "support.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace mvtop;
using nlohmann::json;

namespace {

const std::string kDir = MVTOP_SOURCE_DIR "/scenarios/";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string message(const std::string& text) {
    try {
        (void)parse_scenario(text, "doc");
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const std::string kKummer = R"({
  "schema": "mvtop/1",
  "pairs": { "torus": { "components": [ { "divisor": "[x] + [inf]" } ] } },
  "squares": {
    "k": { "kind": "nisnevich", "base": "torus", "z": ["x - 1"], "e": ["x + 1"], "cover": "x^2", "c": 2, "d": 1 }
  }
})";

} // namespace

TEST_CASE("minimal modulus pair document") {
    Scenario s = parse_scenario(R"({"schema": "mvtop/1",
        "pairs": {"m": {"components": [{"divisor": "[x - 1/2]^3 + [x^2 + 1]", "deleted": ["inf"], "label": "a"}]}}})");
    REQUIRE(s.pairs.size() == 1);
    const ModulusPair& m = s.pair("m");
    CHECK(m.divisor(0) == parse_divisor("[x - 1/2]^3 + [x^2 + 1]"));
    CHECK(m.deleted(0) == std::set<Place>{Place::infinity()});
    CHECK(m.ambient.components[0].label == "a");
}

TEST_CASE("diagnostics carry line and column") {
    std::string zero = "{\n  \"schema\": \"mvtop/1\",\n  \"pairs\": {\"a\": {\"components\": [{\"divisor\": \"[x]^0\"}]}}\n}";
    CHECK(error_kind([&] { (void)parse_scenario(zero, "doc"); }) == ErrorKind::ParseError);
    CHECK(message(zero).find("doc:3:46:") != std::string::npos);
    CHECK(message(zero).find("multiplicity") != std::string::npos);

    std::string unknown = "{\n  \"schema\": \"mvtop/1\",\n  \"colour\": 1\n}";
    CHECK(message(unknown).find("doc:3:3: unknown field \"colour\"") != std::string::npos);

    std::string syntax = "{\n  \"schema\": \"mvtop/1\",\n  \"pairs\": { \"a\" }\n}";
    CHECK(message(syntax).find("doc:3:18: malformed JSON") != std::string::npos);

    CHECK(message(R"({"schema": "mvtop/2"})").find("unsupported schema") != std::string::npos);
    CHECK(message(R"({"pairs": {}})").find("missing field \"schema\"") != std::string::npos);
    CHECK(message(R"({"schema": "mvtop/1", "squares": {"s": {"kind": "explicit", "u": "nope", "p": "a", "v": "a",
        "q": "a"}}})").find("unknown morphism") != std::string::npos);
}

TEST_CASE("generated square matches the constructor") {
    Scenario s = parse_scenario(kKummer);
    const BuiltSquare& b = s.square("k");
    BuiltSquare direct = build_nisnevich_mv_square(parse_scenario(kKummer).pair("torus"), {Place::rational(1)},
                                                   parse_rational_function("x^2"), {Place::rational(-1)}, 2, 1);
    REQUIRE(b.w.has_value());
    CHECK(b.t.v.map == direct.t.v.map);
    CHECK(b.t.t00().same_as(direct.t.t00()));
    CHECK(b.t.t01().same_as(direct.t.t01()));
    CHECK(s.pair("k.10").same_as(direct.t.t10()));
    CHECK(s.morphism("k.p").map == direct.t.p.map);
    CHECK(is_mv_square(b.t, &*b.w).verdict == Verdict::True);
}

TEST_CASE("verify-square exit codes and reports") {
    auto good = run({"verify-square", "--scenario", kDir + "kummer_c2_d1.json", "--json"});
    CHECK(good.code == ExitPass);
    json g = json::parse(good.out);
    CHECK(g["results"]["kummer"]["verdict"] == "true");
    CHECK(g["results"]["kummer"].contains("witness"));
    CHECK(g["results"]["kummer"].contains("od_map"));

    auto bad = run({"verify-square", "--scenario", kDir + "kummer_c1_d2.json", "--json"});
    CHECK(bad.code == ExitCheckFailed);
    json b = json::parse(bad.out);
    CHECK(b["results"]["kummer"]["cond3"] == "false");
    CHECK(b["results"]["kummer"]["verdict"] == "false");

    // byte-identical on rerun
    CHECK(run({"verify-square", "--scenario", kDir + "kummer_c2_d1.json", "--json"}).out == good.out);

    // the certificate's corner parses back to the same pair
    json corner = g["results"]["kummer"]["square"]["v"]["source"];
    json doc{{"schema", "mvtop/1"}, {"pairs", {{"c", corner}}}};
    Scenario back = parse_scenario(doc.dump());
    CHECK(back.pair("c").same_as(parse_scenario(kKummer).square("k").t.t00()));
}

TEST_CASE("every subcommand on the tour scenario") {
    for (const char* c : {"check-admissible", "fiber-product", "off-diagonal", "verify-square", "derived-square",
                          "base-change", "cocartesian", "lift"}) {
        INFO(c);
        auto r = run({c, "--scenario", kDir + "tour.json"});
        CHECK(r.code == ExitPass);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    auto oracle = run({"oracle", "--scenario", kDir + "tour.json", "--bound-degree", "1", "--json"});
    CHECK(oracle.code == ExitPass);
    CHECK(json::parse(oracle.out)["results"][0]["routes_agree"] == true);

    // beyond the enumeration budget: unsupported
    auto big = run({"oracle", "--scenario", kDir + "tour.json", "--bound-degree", "3", "--bound-height", "3"});
    CHECK(big.code == ExitUnsupported);
}

TEST_CASE("failing checks and malformed input") {
    CHECK(run({"verify-square"}).code == ExitMalformed);
    CHECK(run({"no-such-command"}).code == ExitMalformed);
    CHECK(run({"verify-square", "--scenario", kDir + "missing.json"}).code == ExitMalformed);
    CHECK(run({"--help"}).code == ExitPass);

    std::string path = std::string(MVTOP_BINARY_DIR) + "/cli_test_scenario.json";
    auto write = [&](const std::string& text) {
        std::ofstream(path) << text;
        return path;
    };
    // an explicit square has no witness: condition 2 stays open
    auto expl = run({"verify-square", "--json", "--scenario", write(R"({"schema": "mvtop/1",
        "pairs": {"torus": {"components": [{"divisor": "[x] + [inf]"}]}},
        "squares": {"k": {"kind": "nisnevich", "base": "torus", "z": ["x - 1"], "e": ["x + 1"], "cover": "x^2",
                          "c": 2, "d": 1},
                    "e": {"kind": "explicit", "u": "k.u", "p": "k.p", "v": "k.v", "q": "k.q"}}})")});
    CHECK(expl.code == ExitCheckFailed);
    CHECK(json::parse(expl.out)["results"]["e"]["cond2"] == "unknown");

    auto tight = run({"check-admissible", "--scenario", write(R"({"schema": "mvtop/1",
        "pairs": {"torus": {"components": [{"divisor": "[x] + [inf]"}]}},
        "morphisms": {"sq": {"source": "torus", "target": "torus", "components": [{"target": 0, "map": "x^2"}]}}})")});
    CHECK(tight.code == ExitCheckFailed);

    auto interior = run({"check-admissible", "--scenario", write(R"({"schema": "mvtop/1",
        "pairs": {"torus": {"components": [{"divisor": "[x] + [inf]"}]}},
        "morphisms": {"m": {"source": "torus", "target": "torus", "components": [{"target": 0, "map": "x - 1"}]}}})")});
    CHECK(interior.code == ExitCheckFailed);
    CHECK(interior.err.find("cli_test_scenario.json:3:") != std::string::npos);
}
