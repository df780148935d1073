#include "doctest.h"

#include "acgw/generators.hpp"
#include "acgw/homology_maps.hpp"
#include "acgw/oracle.hpp"
#include "acgw/set_build.hpp"

using namespace acgw;

namespace {

constexpr int kRuns = 60;

GenConfig config(bool relabel = false) {
    GenConfig c;
    c.relabel = relabel;
    return c;
}

// |X_i| - |Xbar_i| - |Xbar_{i+1}|, straight from the sizes
std::size_t cardinality_law(const SetComplex& x, int i) {
    return x.object(i).size() - x.transition(i).bar.size() - x.transition(i + 1).bar.size();
}

}  // namespace

TEST_CASE("generated complexes validate and satisfy the cardinality law") {
    Rng rng(1);
    for (int run = 0; run < kRuns; ++run) {
        const auto x = gen_complex(rng, config(run % 2 == 1));
        REQUIRE(validate_complex(x).empty());
        for (int i = x.lo; i <= x.hi(); ++i) {
            const auto g = homology_grid(x, i);
            CHECK(g.h().size() == cardinality_law(x, i));
            CHECK(g.h() == homology_closed(x, i));
        }
    }
}

TEST_CASE("exact generator gives exact complexes") {
    Rng rng(2);
    for (int run = 0; run < kRuns; ++run) {
        const auto x = gen_exact_complex(rng, config(run % 2 == 0));
        REQUIRE(validate_complex(x).empty());
        CHECK(is_exact(x));
    }
}

TEST_CASE("oracle agrees with combinatorial homology") {
    Rng rng(3);
    for (int run = 0; run < kRuns; ++run) {
        const auto x = gen_complex(rng, config(run % 2 == 1));
        const auto f = free_complex(x);
        CHECK(differentials_compose_to_zero(f));
        const auto dims = rank_homology_dims(f);
        for (int i = x.lo; i <= x.hi(); ++i) CHECK(dims[i - x.lo] == homology_at(x, i).size());
        const auto lin = lift_to_linear(x);
        REQUIRE(validate_complex(lin).empty());
        for (int i = x.lo; i <= x.hi(); ++i) CHECK(homology_at(lin, i).dim == dims[i - x.lo]);
    }
}

TEST_CASE("generators are deterministic per seed") {
    Rng a(42), b(42);
    const auto x = gen_complex(a, config());
    const auto y = gen_complex(b, config());
    CHECK(x.objects == y.objects);
}

TEST_CASE("horizontal and vertical morphisms with their complements") {
    Rng rng(4);
    for (int run = 0; run < kRuns; ++run) {
        const auto y = gen_complex(rng, config(run % 2 == 1));
        const auto f = gen_hor_mor(rng, y);
        REQUIRE(validate_hor(f).empty());
        const auto c = coker_hor(f);
        REQUIRE(validate_complex(c.source).empty());
        REQUIRE(validate_ver(c).empty());
        CHECK(validate_ses(ses_of_hor(f)).empty());
        const auto closed = coker_closed(f);
        const auto generic = level_sets(c);
        for (std::size_t k = 0; k < closed.size(); ++k) {
            CHECK(closed[k].object == generic[k].object);
            CHECK(closed[k].transition == generic[k].transition);
        }
        const auto round = level_sets(ker_ver(c));
        const auto orig = level_sets(f);
        for (std::size_t k = 0; k < round.size(); ++k) {
            CHECK(round[k].object == orig[k].object);
            CHECK(round[k].transition == orig[k].transition);
        }
        const auto q = qiso_iff_complement_exact(f);
        CHECK(q.first == q.second);

        const auto g = gen_ver_mor(rng, y);
        REQUIRE(validate_ver(g).empty());
        const auto k = ker_ver(g);
        REQUIRE(validate_hor(k).empty());
        const auto kc = ker_closed(g);
        const auto kg = level_sets(k);
        for (std::size_t j = 0; j < kc.size(); ++j) {
            CHECK(kc[j].object == kg[j].object);
            CHECK(kc[j].transition == kg[j].transition);
        }
        const auto back = level_sets(coker_hor(k));
        const auto gl = level_sets(g);
        for (std::size_t j = 0; j < back.size(); ++j) {
            CHECK(back[j].object == gl[j].object);
            CHECK(back[j].transition == gl[j].transition);
        }
        const auto qv = qiso_iff_complement_exact(g);
        CHECK(qv.first == qv.second);
    }
}

TEST_CASE("weak snake: exactness and closed forms") {
    Rng rng(5);
    for (int run = 0; run < kRuns; ++run) {
        const auto in = gen_snake_input(rng);
        REQUIRE(validate_snake(in).empty());
        const auto r = snake_weak(in);
        CHECK(is_exact_zigzag(r.zigzag));
        CHECK(zigzag_disjoint_union(r.zigzag));
        const auto closed = snake_closed(in);
        const auto got = snake_images(in, r);
        CHECK(closed.d == got.d);
        CHECK(closed.w == got.w);
        CHECK(closed.d2 == got.d2);
    }
}

TEST_CASE("strong snake: exactness") {
    Rng rng(6);
    for (int run = 0; run < kRuns; ++run) {
        const auto in = gen_strong_snake_input(rng);
        REQUIRE(validate_snake(in).empty());
        const auto r = snake_strong(in);
        CHECK(is_exact_zigzag(r.zigzag));
        CHECK(zigzag_disjoint_union(r.zigzag));
    }
}

TEST_CASE("LES of random short exact sequences") {
    Rng rng(7);
    for (int run = 0; run < kRuns; ++run) {
        const auto ses = gen_ses(rng, config(run % 2 == 1));
        REQUIRE(validate_ses(ses).empty());
        const auto les = les_of_ses(ses);
        CHECK(is_exact_zigzag(les.zigzag));
        CHECK(zigzag_disjoint_union(les.zigzag));
    }
}

TEST_CASE("chain maps: validity, factorization, functoriality, quasi-iso criteria") {
    Rng rng(8);
    for (int run = 0; run < kRuns; ++run) {
        NameSource names("y");
        const auto x = gen_complex(rng, config(run % 2 == 1));
        const auto f = gen_chain_map(rng, x, names);
        REQUIRE(validate_chain_map(f).empty());
        const auto [v, h] = split(f);
        CHECK(validate_ver(v).empty());
        CHECK(validate_hor(h).empty());
        CHECK(chain_maps_equivalent(join(v, h), f));
        CHECK(chain_maps_equivalent(compose_chain_maps(to_chain_map(v), to_chain_map(h)), f));
        const auto g = gen_chain_map(rng, f.target, names);
        REQUIRE(validate_chain_map(g).empty());
        const auto gf = compose_chain_maps(f, g);
        CHECK(validate_chain_map(gf).empty());
        CHECK(check_functoriality(f, g));
        CHECK(is_quasi_iso(f) == qiso_four_sets(f));
        CHECK(is_quasi_iso(gf) == qiso_four_sets(gf));
        const auto r = support_union(f.source, f.target);
        for (int i = r.lo; i <= r.hi; ++i) CHECK(span_equiv(FinSetInstance{}, h_on_map(f, i), h_on_map_closed(f, i)));
        CHECK(check_functoriality(identity_map(x), f));
    }
}

TEST_CASE("homology complex in both directions is a quasi-isomorphism") {
    Rng rng(9);
    for (int run = 0; run < kRuns; ++run) {
        const auto x = gen_complex(rng, config(run % 2 == 1));
        for (auto dir : {Direction::horizontal, Direction::vertical}) {
            const auto h = homology_complex(x, dir);
            CHECK(validate_chain_map(h.map).empty());
            CHECK(is_quasi_iso(h.map));
        }
    }
}

TEST_CASE("linear complexes: homology dimension law, both orders, homology complex") {
    Rng rng(10);
    for (int run = 0; run < kRuns; ++run) {
        const auto x = gen_linear_complex(rng, config());
        REQUIRE(validate_complex(x).empty());
        for (int i = x.lo; i <= x.hi(); ++i) {
            const auto g = homology_grid(x, i);
            CHECK(g.h().dim == x.object(i).dim - x.transition(i).bar.dim - x.transition(i + 1).bar.dim);
            CHECK(g.h_prime().dim == g.h().dim);
        }
        for (auto dir : {Direction::horizontal, Direction::vertical}) {
            const auto h = homology_complex(x, dir);
            CHECK(validate_chain_map(h.map).empty());
            CHECK(is_quasi_iso(h.map));
        }
    }
}
