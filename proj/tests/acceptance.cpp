// One line per acceptance criterion: PASS/FAIL, counts and wall time.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "acgw/document.hpp"
#include "acgw/generators.hpp"
#include "acgw/homology_maps.hpp"
#include "acgw/les.hpp"
#include "acgw/oracle.hpp"
#include "commands.hpp"

using namespace acgw;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document corpus(const std::string& name) { return parse_document(slurp(std::filesystem::path(ACGW_CORPUS_DIR) / name)); }

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    void check(bool ok) {
        ++checked;
        if (!ok) ++failed;
    }
};

GenConfig sizes(bool relabel) {
    GenConfig c;
    c.max_size = 8;
    c.max_support = 6;
    c.relabel = relabel;
    return c;
}

bool run(int id, const char* what, double limit_s, const std::function<void(Tally&)>& body) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body(t);
    } catch (const std::exception& e) {
        error = e.what();
        ++t.failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = t.failed == 0 && error.empty() && secs < limit_s;
    std::printf("%s  [%2d] %-64s %6zu checks, %zu failed, %.3fs (limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", id, what,
                t.checked, t.failed, secs, limit_s, error.empty() ? "" : "  error: ", error.c_str());
    return pass;
}

}  // namespace

int main() {
    bool all = true;

    all &= run(1, "subcomplex example: H_2(X) = {a}, H_2(Y) = {}, inclusion valid", 1, [](Tally& t) {
        const auto doc = corpus("subcomplex.acgw");
        const auto& d = std::get<SetDocument>(doc);
        const auto& x = *d.complex("X");
        const auto& y = *d.complex("Y");
        t.check(homology_at(x, 2) == FinSetObj({"a"}));
        t.check(homology_at(y, 2).empty());
        t.check(validate_hor(d.hors.at(0).second.mor).empty());
    });

    all &= run(2, "quasi-iso composite with non-quasi-iso legs", 1, [](Tally& t) {
        const auto doc = corpus("qiso_legs.acgw");
        const auto& d = std::get<SetDocument>(doc);
        const auto& f = d.maps.at(0).second.map;
        const auto [left, right] = split(f);
        t.check(is_quasi_iso(f));
        t.check(!is_quasi_iso(to_chain_map(left)));
        t.check(!is_quasi_iso(to_chain_map(right)));
    });

    all &= run(3, "1000 set complexes: both complement orders, cardinality law", 10, [](Tally& t) {
        Rng rng(1001);
        for (int k = 0; k < 1000; ++k) {
            const auto x = gen_complex(rng, sizes(k % 2 == 1));
            for (int i = x.lo; i <= x.hi(); ++i) {
                const auto h = homology_at(x, i);
                t.check(h == homology_at_cokernel_first(x, i));
                t.check(h.size() ==
                        x.object(i).size() - x.transition(i).bar.size() - x.transition(i + 1).bar.size());
            }
        }
    });

    all &= run(4, "500 set complexes: rank homology over F_2 matches", 30, [](Tally& t) {
        Rng rng(1002);
        for (int k = 0; k < 500; ++k) {
            const auto x = gen_complex(rng, sizes(k % 2 == 0));
            const auto dims = rank_homology_dims(free_complex(x, 2));
            for (int i = x.lo; i <= x.hi(); ++i) t.check(dims[static_cast<std::size_t>(i - x.lo)] == homology_at(x, i).size());
        }
    });

    all &= run(5, "300 weak + 100 strong snakes: exact, D/W/D' closed forms", 30, [](Tally& t) {
        Rng rng(1003);
        for (int k = 0; k < 300; ++k) {
            const auto in = gen_snake_input(rng, 6);
            const auto r = snake_weak(in);
            const auto closed = snake_closed(in);
            const auto got = snake_images(in, r);
            t.check(is_exact_zigzag(r.zigzag) && closed.d == got.d && closed.w == got.w && closed.d2 == got.d2);
        }
        for (int k = 0; k < 100; ++k) {
            const auto in = gen_strong_snake_input(rng, 6);
            const auto r = snake_strong(in);
            const auto closed = snake_closed(in.weak);
            const auto got = snake_images(in.weak, r);
            t.check(is_exact_zigzag(r.zigzag) && closed.d == got.d && closed.w == got.w && closed.d2 == got.d2);
        }
    });

    all &= run(6, "200 short exact sequences: long exact sequence, splices", 30, [](Tally& t) {
        Rng rng(1004);
        for (int k = 0; k < 200; ++k) {
            const auto s = gen_ses(rng, sizes(k % 2 == 1));
            const auto les = les_of_ses(s);  // a failed splice throws
            t.check(is_exact_zigzag(les.zigzag));
        }
    });

    all &= run(7, "500 composable chain-map pairs: H(g o f) = H(g) o H(f)", 30, [](Tally& t) {
        Rng rng(1005);
        for (int k = 0; k < 500; ++k) {
            NameSource names("y");
            const auto x = gen_complex(rng, sizes(k % 2 == 1));
            const auto f = gen_chain_map(rng, x, names);
            const auto g = gen_chain_map(rng, f.target, names);
            t.check(check_functoriality(f, g));
        }
    });

    all &= run(8, "300 hor + 300 ver morphisms: quasi-iso iff complement exact", 30, [](Tally& t) {
        Rng rng(1006);
        for (int k = 0; k < 300; ++k) {
            const auto y = gen_complex(rng, sizes(k % 2 == 1));
            const auto h = qiso_iff_complement_exact(gen_hor_mor(rng, y));
            t.check(h.first == h.second);
            const auto v = qiso_iff_complement_exact(gen_ver_mor(rng, y));
            t.check(v.first == v.second);
        }
    });

    all &= run(9, "200 complexes: homology complex both ways is a quasi-iso", 10, [](Tally& t) {
        Rng rng(1007);
        for (int k = 0; k < 200; ++k) {
            const auto x = gen_complex(rng, sizes(k % 2 == 0));
            for (auto dir : {Direction::horizontal, Direction::vertical}) {
                const auto hc = homology_complex(x, dir);
                t.check(validate_chain_map(hc.map).empty() && is_quasi_iso(hc.map));
            }
        }
    });

    all &= run(10, "100 F_2 complexes: dimension law; hand-built F_2 snake exact", 10, [](Tally& t) {
        Rng rng(1008);
        GenConfig cfg;
        cfg.p = 2;
        for (int k = 0; k < 100; ++k) {
            const auto x = gen_linear_complex(rng, cfg);
            for (int i = x.lo; i <= x.hi(); ++i)
                t.check(homology_at(x, i).dim ==
                        x.object(i).dim - x.transition(i).bar.dim - x.transition(i + 1).bar.dim);
        }
        const auto doc = corpus("linear_snake_f2.acgw");
        const auto& d = std::get<LinearDocument>(doc);
        const auto r = snake_weak(d.snakes.at(0).second.input.weak);
        t.check(is_exact_zigzag(r.zigzag));
        long long alternating = 0;
        for (std::size_t j = 0; j < r.zigzag.objects.size(); ++j)
            alternating += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(r.zigzag.objects[j].dim);
        t.check(alternating == 0);
    });

    all &= run(11, "corpus round-trip; generated documents validate", 5, [](Tally& t) {
        for (const auto& entry : std::filesystem::directory_iterator(ACGW_CORPUS_DIR)) {
            if (entry.path().extension() != ".acgw") continue;
            const auto once = serialize_document(parse_document(slurp(entry.path())));
            t.check(serialize_document(parse_document(once)) == once);
        }
        for (const char* kind : {"complex", "map", "ses", "snake"})
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                cli::GenRequest req;
                req.kind = kind;
                req.seed = seed;
                req.strong = seed % 2 == 1;
                t.check(cli::cmd_validate(parse_document(cli::cmd_gen(req).text)).code == cli::kOk);
            }
    });

    std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
