#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace acgw;
using namespace acgw::cli;

namespace {

Document corpus(const std::string& name) {
    std::ifstream in(std::filesystem::path(ACGW_CORPUS_DIR) / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("homology report on the subcomplex example") {
    const auto out = cmd_homology(corpus("subcomplex.acgw"));
    CHECK(out.code == kOk);
    CHECK(contains(out.text, "H_2(X) = {a}; H_2(Y) = {}"));
    CHECK(contains(out.text, "cardinality law for X"));
    CHECK(out.json["homology"]["X"]["2"] == nlohmann::json::array({"a"}));
}

TEST_CASE("validate on the empty complex is ok") {
    const auto out = cmd_validate(corpus("empty.acgw"));
    CHECK(out.code == kOk);
    CHECK(contains(out.text, "ok"));
}

TEST_CASE("oracle agrees on generated complexes") {
    GenRequest req;
    req.seed = 7;
    const auto doc = parse_document(cmd_gen(req).text);
    const auto out = cmd_oracle(doc);
    CHECK(out.code == kOk);
    CHECK(contains(out.text, "agree at all degrees"));
    CHECK_THROWS_AS(cmd_oracle(corpus("linear_complex_f3.acgw")), UsageError);
}

TEST_CASE("validate reports degree-labelled violations with exit 1") {
    const auto doc = parse_document(
        "instance set\ncomplex X 1 3\n  X 3 : {a}\n  T 3 : {a}\n  X 2 : {a}\n  T 2 : {a}\n  X 1 : {a}\nend\n");
    const auto out = cmd_validate(doc);
    CHECK(out.code == kSemantic);
    CHECK(contains(out.text, "degree 2:"));
}

TEST_CASE("exact, snake, les and map-homology reports") {
    auto out = cmd_exact(corpus("ses_three_term.acgw"));
    CHECK(out.code == kOk);
    CHECK(contains(out.text, "E: exact"));
    out = cmd_exact(corpus("subcomplex.acgw"));
    CHECK(out.code == kSemantic);
    CHECK(contains(out.text, "X: not exact at degrees 2"));

    out = cmd_snake(corpus("weak_snake.acgw"));
    CHECK(out.code == kOk);
    CHECK(contains(out.text, "via D = {c2}"));
    CHECK(contains(out.text, "via W = {r}"));
    CHECK(contains(out.text, "via D' = {m}"));
    CHECK(contains(out.text, "exact: yes"));
    CHECK(cmd_snake(corpus("strong_snake.acgw")).code == kOk);
    CHECK(cmd_snake(corpus("linear_snake_f2.acgw")).code == kOk);
    CHECK_THROWS_AS(cmd_snake(corpus("subcomplex.acgw")), UsageError);

    out = cmd_les(corpus("subcomplex_les.acgw"));
    CHECK(out.code == kOk);
    CHECK(contains(out.text, "via delta_3 = {a}"));
    CHECK(contains(out.text, "H_2(X) = {a}"));

    out = cmd_map_homology(corpus("qiso_legs.acgw"));
    CHECK(contains(out.text, "quasi-isomorphism: yes"));
    out = cmd_map_homology(corpus("subcomplex.acgw"));
    CHECK(contains(out.text, "quasi-isomorphism: no"));
    CHECK(out.json["hor f"]["quasi_iso"] == false);
}

TEST_CASE("render emits dot with highlighted homology") {
    const auto out = cmd_render(corpus("subcomplex.acgw"), "dot", "X");
    CHECK(contains(out.text, "digraph \"X\""));
    CHECK(contains(out.text, "fillcolor"));
    CHECK(contains(out.text, "style=dashed"));
    CHECK_THROWS_AS(cmd_render(corpus("subcomplex.acgw"), "svg"), UsageError);
    CHECK_THROWS_AS(cmd_render(corpus("subcomplex.acgw"), "dot", "nope"), UsageError);
    CHECK(contains(cmd_render(corpus("weak_snake.acgw"), "dot").text, "D = {c2}"));
}

TEST_CASE("gen output validates for every kind") {
    for (const char* kind : {"complex", "map", "ses", "snake"}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GenRequest req;
            req.kind = kind;
            req.seed = seed;
            req.strong = seed % 2 == 1;
            const auto text = cmd_gen(req).text;
            CAPTURE(text);
            CHECK(cmd_validate(parse_document(text)).code == kOk);
            CHECK(cmd_gen(req).text == text);
        }
    }
    GenRequest bad;
    bad.kind = "widget";
    CHECK_THROWS_AS(cmd_gen(bad), UsageError);
}
