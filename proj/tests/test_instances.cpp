#include "doctest.h"

#include "acgw/chains.hpp"
#include "acgw/finset.hpp"
#include "acgw/linear.hpp"

using namespace acgw;

namespace {

FinSetObj S(std::vector<Element> e) { return FinSetObj(std::move(e)); }
SetHor incl_h(const FinSetObj& a, const FinSetObj& b) { return SetHor(inclusion(a, b)); }
SetVer incl_v(const FinSetObj& a, const FinSetObj& b) { return SetVer(inclusion(a, b)); }

}  // namespace

TEST_CASE("finset complements and pullback") {
    FinSetInstance fs;
    auto ab = S({"a", "b", "c"});
    auto m = incl_h(S({"a"}), ab);
    auto c = fs.complement_h(m);
    CHECK(c.source == S({"b", "c"}));
    CHECK(fs.complement_v(c).source == S({"a"}));
    auto pb = fs.mixed_pullback(incl_h(S({"a", "b"}), ab), incl_v(S({"b", "c"}), ab));
    CHECK(pb.corner == S({"b"}));
    CHECK(fs.classify_mixed(pb.to_b, pb.to_a, incl_h(S({"a", "b"}), ab), incl_v(S({"b", "c"}), ab)) ==
          SquareClass::pseudo_commutative);
    auto empty_corner = incl_h(FinSetObj{}, S({"b", "c"}));
    CHECK(fs.classify_mixed(empty_corner, incl_v(FinSetObj{}, S({"a", "b"})), incl_h(S({"a", "b"}), ab),
                            incl_v(S({"b", "c"}), ab)) == SquareClass::commuting);
}

TEST_CASE("finset duplicate elements rejected") { CHECK_THROWS_AS(S({"a", "a"}), ValidationError); }

TEST_CASE("pointed maps and spans") {
    FinSetInstance fs;
    auto f = make_flat(fs, incl_v(S({"b"}), S({"a", "b"})), incl_h(S({"b"}), S({"b", "c"})));
    auto g = make_flat(fs, incl_v(S({"c"}), S({"b", "c"})), incl_h(S({"c"}), S({"c"})));
    auto gf = compose_flat(fs, f, g);
    CHECK(gf.middle.empty());
    CHECK(compose_pointed(to_pointed(f), to_pointed(g)) == to_pointed(gf));
    CHECK(from_pointed(to_pointed(f)).middle == S({"b"}));
}

TEST_CASE("linear complements") {
    LinearInstance lin;
    auto m = lin.mono(FpMatrix::from_rows({{1}, {1}, {0}}, 1, 2));
    auto q = lin.complement_h(m);
    CHECK(q.source.dim == 2);
    CHECK((q.matrix * m.matrix).is_zero());
    auto k = lin.complement_v(q);
    CHECK(lin.same_image_h(k, m));
    auto s = lin.section_v(q);
    CHECK(q.matrix * s.matrix == FpMatrix::identity(2, 2));
    auto r = lin.retraction_h(m);
    CHECK(r.matrix * m.matrix == FpMatrix::identity(1, 2));
}

TEST_CASE("ses_from_injection is exact-shaped") {
    FinSetInstance fs;
    auto x = ses_from_injection(fs, incl_h(S({"a"}), S({"a", "b"})));
    CHECK(validate_complex(x).empty());
    CHECK(x.object(1) == S({"b"}));
}
