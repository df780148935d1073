#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "acgw/document.hpp"
#include "acgw/generators.hpp"
#include "acgw/homology.hpp"

using namespace acgw;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParseError parse_failure(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("corpus documents round-trip through the canonical form") {
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ACGW_CORPUS_DIR)) {
        if (entry.path().extension() != ".acgw") continue;
        ++files;
        CAPTURE(entry.path().string());
        const auto once = serialize_document(parse_document(slurp(entry.path())));
        CHECK(serialize_document(parse_document(once)) == once);
    }
    CHECK(files >= 8);
}

TEST_CASE("set complex parsing with default inclusions") {
    const auto doc = parse_document(
        "instance set\n"
        "complex Y 1 3 \n"
        "  X 3 : {a}\n"
        "  T 3 : {a}\n"
        "  X 2 : {a, b}\n"
        "  T 2 : {b}\n"
        "  X 1 : {b}\n"
        "end\n");
    const auto& d = std::get<SetDocument>(doc);
    const auto* y = d.complex("Y");
    REQUIRE(y != nullptr);
    CHECK(validate_complex(*y).empty());
    CHECK(y->object(2).size() == 2);
    CHECK(homology_at(*y, 2).empty());
}

TEST_CASE("explicit set maps survive serialization") {
    const std::string text =
        "instance set\n"
        "\n"
        "complex X 1 2\n"
        "  X 2 : {a}\n"
        "  T 2 : {t} up {t>a} down {t>c}\n"
        "  X 1 : {c}\n"
        "end\n";
    CHECK(serialize_document(parse_document(text)) == text);
}

TEST_CASE("linear documents need explicit matrices with matching shapes") {
    const auto ok = parse_document(
        "instance linear 5\n"
        "complex V 1 2\n"
        "  X 2 : dim 1\n"
        "  T 2 : dim 1 up [[1]] down [[3]]\n"
        "  X 1 : dim 1\n"
        "end\n");
    const auto& d = std::get<LinearDocument>(ok);
    CHECK(d.inst.prime() == 5);
    CHECK(validate_complex(*d.complex("V")).empty());

    const auto shape = parse_failure(
        "instance linear 2\n"
        "complex V 1 2\n"
        "  X 2 : dim 2\n"
        "  T 2 : dim 1 up [[1]] down [[1]]\n"
        "  X 1 : dim 1\n"
        "end\n");
    CHECK(shape.line() == 4);
    CHECK(shape.column() == 18);

    const auto missing = parse_failure(
        "instance linear 2\n"
        "complex V 1 2\n"
        "  X 2 : dim 1\n"
        "  T 2 : dim 1 up [[1]]\n"
        "  X 1 : dim 1\n"
        "end\n");
    CHECK(missing.line() == 4);

    CHECK(parse_failure("instance linear 4\n").column() == 17);
}

TEST_CASE("parse errors carry line and column") {
    auto e = parse_failure("instance set\ncomplex X 1 2\n  X 2 : {a\nend\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);

    e = parse_failure("complex X 1 1\nend\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);

    e = parse_failure("instance set\ncomplex X 1 2\n  X 5 : {}\nend\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);

    e = parse_failure("instance set\ncomplex X 1 2\n  X 2 : {a}\n");
    CHECK(e.line() == 2);

    e = parse_failure("instance set\nwidget W\n");
    CHECK(e.line() == 2);

    e = parse_failure("instance set\nhor f : X -> Y\nend\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);

    e = parse_failure("instance set\ncomplex X 1 1\n  X 1 : {a, a}\nend\n");
    CHECK(e.line() == 3);

    e = parse_failure("instance set\ncomplex X 1 2\n  X 2 : {a}\n  T 2 : {t}\n  X 1 : {}\nend\n");
    CHECK(e.line() == 4);

    e = parse_failure("instance set\nsnake s weak\n  object A : {}\nend\n");
    CHECK(e.line() == 2);
}

TEST_CASE("structurally sound but invalid data parses and fails validation") {
    const auto doc = parse_document(
        "instance set\n"
        "complex X 1 3\n"
        "  X 3 : {a}\n"
        "  T 3 : {a}\n"
        "  X 2 : {a}\n"
        "  T 2 : {a}\n"
        "  X 1 : {a}\n"
        "end\n");
    const auto v = validate_complex(*std::get<SetDocument>(doc).complex("X"));
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().degree == 2);
}

TEST_CASE("generated documents round-trip") {
    Rng rng(11);
    for (int run = 0; run < 30; ++run) {
        SetDocument d;
        GenConfig cfg;
        cfg.relabel = run % 2 == 1;
        d.complexes.emplace_back("X", gen_complex(rng, cfg));
        NameSource names("y");
        const auto f = gen_chain_map(rng, d.complexes.front().second, names);
        d.complexes.emplace_back("M", f.middle);
        d.complexes.emplace_back("Y", f.target);
        d.maps.emplace_back("f", NamedMap<FinSetInstance>{"X", "M", "Y", f});
        NamedSnake<FinSetInstance> s;
        s.input.weak = gen_snake_input(rng);
        d.snakes.emplace_back("s", s);
        const auto text = serialize_document(Document(d));
        const auto back = parse_document(text);
        CHECK(serialize_document(back) == text);
        const auto& b = std::get<SetDocument>(back);
        CHECK(b.complexes[0].second.objects == d.complexes[0].second.objects);
        CHECK(validate_chain_map(b.maps[0].second.map).empty());
        CHECK(validate_snake(b.snakes[0].second.input.weak).empty());
    }
}
