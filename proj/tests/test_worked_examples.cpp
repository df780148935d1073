#include "doctest.h"

#include "acgw/homology_maps.hpp"
#include "acgw/set_build.hpp"

using namespace acgw;

namespace {

FinSetObj S(std::vector<Element> e) { return FinSetObj(std::move(e)); }

// degrees 1..3: X_3 <-| Xbar_3 >-> X_2 <-| Xbar_2 >-> X_1
SetComplex three(std::vector<Element> x3, std::vector<Element> b3, std::vector<Element> x2,
                 std::vector<Element> b2, std::vector<Element> x1) {
    return named_complex(1, {x1, x2, x3}, {b2, b3});
}

SetComplex subcomplex_x() { return three({}, {}, {"a"}, {}, {}); }
SetComplex subcomplex_y() { return three({"a"}, {"a"}, {"a", "b"}, {"b"}, {"b"}); }

}  // namespace

TEST_CASE("subcomplex example homology") {
    const auto x = subcomplex_x();
    const auto y = subcomplex_y();
    REQUIRE(validate_complex(x).empty());
    REQUIRE(validate_complex(y).empty());
    CHECK(homology_at(x, 2) == S({"a"}));
    CHECK(homology_at(y, 2) == FinSetObj{});
    CHECK(homology_at_cokernel_first(x, 2) == S({"a"}));
    CHECK(homology_closed(x, 2) == S({"a"}));
    const auto f = named_hor(x, y);
    CHECK(validate_hor(f).empty());
    CHECK_FALSE(is_exact(x));
    CHECK(is_exact(y));
}

TEST_CASE("subcomplex example cokernel") {
    const auto f = named_hor(subcomplex_x(), subcomplex_y());
    const auto c = coker_hor(f);
    CHECK(validate_complex(c.source).empty());
    CHECK(validate_ver(c).empty());
    CHECK(c.source.object(3) == S({"a"}));
    CHECK(c.source.object(2) == S({"b"}));
    CHECK(c.source.object(1) == S({"b"}));
    CHECK(c.source.transition(3).bar == FinSetObj{});
    CHECK(c.source.transition(2).bar == S({"b"}));
    CHECK(homology_at(c.source, 3) == S({"a"}));
    const auto closed = coker_closed(f);
    const auto generic = level_sets(c);
    REQUIRE(closed.size() == generic.size());
    for (std::size_t k = 0; k < closed.size(); ++k) {
        CHECK(closed[k].object == generic[k].object);
        CHECK(closed[k].transition == generic[k].transition);
    }
    const auto back = ker_ver(c);
    CHECK(validate_hor(back).empty());
    const auto ls = level_sets(back);
    const auto orig = level_sets(f);
    for (std::size_t k = 0; k < ls.size(); ++k) {
        CHECK(ls[k].object == orig[k].object);
        CHECK(ls[k].transition == orig[k].transition);
    }
    const auto q = qiso_iff_complement_exact(f);
    CHECK_FALSE(q.first);
    CHECK_FALSE(q.second);
    const auto les = les_of_ses(ses_of_hor(f));
    CHECK(is_exact_zigzag(les.zigzag));
    CHECK(zigzag_disjoint_union(les.zigzag));
}

TEST_CASE("quasi-isomorphism whose legs are not") {
    const auto top = three({"a"}, {"a"}, {"a", "b"}, {"b"}, {"b"});
    const auto mid = three({}, {}, {"b"}, {}, {});
    const auto bot = three({"b"}, {"b"}, {"b"}, {}, {});
    const auto f = named_map(top, mid, bot);
    REQUIRE(validate_chain_map(f).empty());
    const auto [left, right] = split(f);
    const auto left_map = to_chain_map(left);
    const auto right_map = to_chain_map(right);
    CHECK(is_quasi_iso(f));
    CHECK_FALSE(is_quasi_iso(left_map));
    CHECK_FALSE(is_quasi_iso(right_map));
    CHECK(qiso_four_sets(f));
    CHECK_FALSE(qiso_four_sets(left_map));
    CHECK_FALSE(qiso_four_sets(right_map));
    CHECK(homology_at(mid, 2) == S({"b"}));
    for (int i = 1; i <= 3; ++i) {
        CHECK(span_equiv(FinSetInstance{}, h_on_map(f, i), h_on_map_closed(f, i)));
        CHECK(span_equiv(FinSetInstance{}, h_on_map(left_map, i), h_on_map_closed(left_map, i)));
    }
    CHECK(check_functoriality(to_chain_map(left), to_chain_map(right)) == true);
}

TEST_CASE("ses_from_injection is exact") {
    FinSetInstance fs;
    const auto x = ses_from_injection(fs, SetHor(inclusion(S({"a"}), S({"a", "b"}))));
    CHECK(validate_complex(x).empty());
    CHECK(is_exact(x));
    CHECK(x.object(2) == S({"a", "b"}));
}

TEST_CASE("homology complex of the subcomplex example") {
    for (auto dir : {Direction::horizontal, Direction::vertical}) {
        const auto h = homology_complex(subcomplex_x(), dir);
        CHECK(validate_chain_map(h.map).empty());
        CHECK(is_quasi_iso(h.map));
        CHECK(h.complex.object(2) == S({"a"}));
    }
}
