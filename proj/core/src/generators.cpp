#include "acgw/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "acgw/set_build.hpp"

namespace acgw {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    if (hi <= lo) return lo;
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

struct TransElem {
    Element name;
    Element up;
    Element down;
};

/// objects[k] = X_{lo+k}; trans[k] = Xbar_{lo+1+k} with explicit legs.
SetComplex complex_from_maps(int lo, const std::vector<std::vector<Element>>& objects,
                             const std::vector<std::vector<TransElem>>& trans) {
    SetComplex x{FinSetInstance{}, lo, {}, {}};
    for (const auto& o : objects) x.objects.emplace_back(o);
    for (std::size_t k = 0; k < trans.size(); ++k) {
        std::vector<Element> names;
        for (const auto& t : trans[k]) names.push_back(t.name);
        FinSetObj bar(names);
        const auto& up_obj = x.objects[k + 1];
        const auto& down_obj = x.objects[k];
        SetVer up(bar, up_obj, std::vector<std::size_t>(bar.size()));
        SetHor down(bar, down_obj, std::vector<std::size_t>(bar.size()));
        for (const auto& t : trans[k]) {
            const auto j = *bar.index_of(t.name);
            up.map[j] = *up_obj.index_of(t.up);
            down.map[j] = *down_obj.index_of(t.down);
        }
        x.transitions.push_back({std::move(bar), std::move(up), std::move(down)});
    }
    return x;
}

SetComplex random_complex(Rng& rng, const GenConfig& cfg, bool exact) {
    const int len = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(std::max(1, cfg.max_support))));
    const auto n = static_cast<std::size_t>(len);
    NameSource obj_names("x");
    NameSource bar_names("t");
    std::vector<std::size_t> b(n + 1, 0);  // b[k] = |Xbar_{lo+k}|, b[0] = 0
    for (std::size_t k = 1; k < n; ++k) b[k] = uniform(rng, 0, cfg.max_size / 2);
    std::vector<std::vector<Element>> objects(n);
    std::vector<std::vector<TransElem>> trans(n > 0 ? n - 1 : 0);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = 0; j < b[k]; ++j) {
            TransElem t;
            if (cfg.relabel) {
                t = {bar_names.next(), obj_names.next(), obj_names.next()};
            } else {
                const auto e = obj_names.next();
                t = {e, e, e};
            }
            objects[k].push_back(t.up);
            objects[k - 1].push_back(t.down);
            trans[k - 1].push_back(std::move(t));
        }
    }
    if (!exact)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t used = objects[k].size();
            const std::size_t h = uniform(rng, 0, cfg.max_size > used ? cfg.max_size - used : 0);
            for (std::size_t j = 0; j < h; ++j) objects[k].push_back(obj_names.next());
        }
    return complex_from_maps(cfg.lo, objects, trans);
}

/// The subcomplex on the given element subsets, keeping transitions with both ends inside.
SetComplex restrict_complex(const SetComplex& y, const std::vector<std::set<Element>>& keep) {
    std::vector<std::vector<Element>> objects;
    std::vector<std::vector<TransElem>> trans;
    for (int i = y.lo; i <= y.hi(); ++i) {
        const auto& s = keep[static_cast<std::size_t>(i - y.lo)];
        objects.emplace_back(s.begin(), s.end());
        if (i == y.lo) continue;
        const auto t = y.transition(i);
        std::vector<TransElem> row;
        const auto& below = keep[static_cast<std::size_t>(i - 1 - y.lo)];
        for (std::size_t k = 0; k < t.bar.size(); ++k) {
            const auto& up = t.upper.target[t.upper.map[k]];
            const auto& down = t.lower.target[t.lower.map[k]];
            if (s.count(up) && below.count(down)) row.push_back({t.bar[k], up, down});
        }
        trans.push_back(std::move(row));
    }
    return complex_from_maps(y.lo, objects, trans);
}

std::set<Element> random_subset(Rng& rng, const FinSetObj& s, const std::set<Element>& forbidden) {
    std::set<Element> out;
    for (const auto& e : s.elements())
        if (!forbidden.count(e) && coin(rng)) out.insert(e);
    return out;
}

}  // namespace

SetComplex gen_complex(Rng& rng, const GenConfig& cfg) { return random_complex(rng, cfg, false); }

SetComplex gen_exact_complex(Rng& rng, const GenConfig& cfg) { return random_complex(rng, cfg, true); }

SetHorChainMor gen_hor_mor(Rng& rng, const SetComplex& y) {
    std::vector<std::set<Element>> keep;
    for (int i = y.lo; i <= y.hi(); ++i) {
        std::set<Element> forbidden;
        if (i > y.lo) {
            const auto t = y.transition(i);
            for (std::size_t k = 0; k < t.bar.size(); ++k)
                if (!keep.back().count(t.lower.target[t.lower.map[k]]))
                    forbidden.insert(t.upper.target[t.upper.map[k]]);
        }
        keep.push_back(random_subset(rng, y.object(i), forbidden));
    }
    return named_hor(restrict_complex(y, keep), y);
}

SetVerChainMor gen_ver_mor(Rng& rng, const SetComplex& y) {
    const auto n = y.objects.size();
    std::vector<std::set<Element>> keep(n);
    for (int i = y.hi(); i >= y.lo; --i) {
        std::set<Element> forbidden;
        if (i < y.hi()) {
            const auto t = y.transition(i + 1);
            const auto& above = keep[static_cast<std::size_t>(i + 1 - y.lo)];
            for (std::size_t k = 0; k < t.bar.size(); ++k)
                if (!above.count(t.upper.target[t.upper.map[k]]))
                    forbidden.insert(t.lower.target[t.lower.map[k]]);
        }
        keep[static_cast<std::size_t>(i - y.lo)] = random_subset(rng, y.object(i), forbidden);
    }
    return named_ver(restrict_complex(y, keep), y);
}

SetChainMap gen_chain_map(Rng& rng, const SetComplex& x, NameSource& names) {
    const auto back = gen_ver_mor(rng, x);
    const auto& z = back.source;
    const auto n = z.objects.size();
    std::vector<std::vector<Element>> objects(n);
    std::vector<std::vector<TransElem>> trans(n > 0 ? n - 1 : 0);
    std::vector<std::set<Element>> blocked(n);  // elements of Z_i already hit by a transition of Y
    for (int i = z.lo; i <= z.hi(); ++i) {
        const auto k = static_cast<std::size_t>(i - z.lo);
        const auto zi = z.object(i);
        objects[k] = zi.elements();
        const auto t = z.transition(i);
        for (std::size_t j = 0; j < t.bar.size(); ++j) {
            blocked[k].insert(t.upper.target[t.upper.map[j]]);
            if (k > 0) {
                blocked[k - 1].insert(t.lower.target[t.lower.map[j]]);
                trans[k - 1].push_back(
                    {t.bar[j], t.upper.target[t.upper.map[j]], t.lower.target[t.lower.map[j]]});
            }
        }
    }
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t extra = uniform(rng, 0, 2);
        for (std::size_t j = 0; j < extra; ++j) {
            const auto up = names.next();
            objects[k].push_back(up);
            Element down;
            std::vector<Element> free;
            const auto below = z.object(z.lo + static_cast<int>(k) - 1);
            for (const auto& e : below.elements())
                if (!blocked[k - 1].count(e)) free.push_back(e);
            if (!free.empty() && coin(rng)) {
                down = free[uniform(rng, 0, free.size() - 1)];
                blocked[k - 1].insert(down);
            } else {
                down = names.next();
                objects[k - 1].push_back(down);
            }
            trans[k - 1].push_back({names.next(), up, down});
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t extra = uniform(rng, 0, 2);
        for (std::size_t j = 0; j < extra; ++j) objects[k].push_back(names.next());
    }
    const auto y = n == 0 ? SetComplex{FinSetInstance{}, x.lo, {}, {}} : complex_from_maps(z.lo, objects, trans);
    return join(back, named_hor(z, y));
}

ChainSES<FinSetInstance> gen_ses(Rng& rng, const GenConfig& cfg) {
    const auto y = gen_complex(rng, cfg);
    return ses_of_hor(gen_hor_mor(rng, y));
}

namespace {

struct SnakeSets {
    std::vector<Element> a, c, a2, c2, x, y, z;
};

SnakeSets random_snake_sets(Rng& rng, std::size_t max_size) {
    for (int attempt = 0; attempt < GenConfig::max_attempts; ++attempt) {
        const std::size_t aa = uniform(rng, 0, 2), cc = uniform(rng, 0, 2), ca = uniform(rng, 0, 2);
        const std::size_t ao = uniform(rng, 0, 2), co = uniform(rng, 0, 2);
        const std::size_t a2o = uniform(rng, 0, 2), c2o = uniform(rng, 0, 2);
        const std::size_t ny = aa + cc + ca;
        if (ny + ao + co > max_size || ny + a2o + c2o > max_size) continue;
        SnakeSets s;
        auto add = [](std::size_t count, const std::string& prefix, std::initializer_list<std::vector<Element>*> into) {
            for (std::size_t j = 0; j < count; ++j)
                for (auto* v : into) v->push_back(prefix + std::to_string(j));
        };
        add(aa, "p", {&s.a, &s.a2, &s.x, &s.y});
        add(cc, "q", {&s.c, &s.c2, &s.z, &s.y});
        add(ca, "r", {&s.c, &s.a2, &s.y});
        add(ao, "a", {&s.a});
        add(co, "c", {&s.c});
        add(a2o, "u", {&s.a2});
        add(c2o, "v", {&s.c2});
        return s;
    }
    throw GenerationError("gen_snake_input: no admissible sizes within " + std::to_string(GenConfig::max_attempts) +
                          " attempts");
}

SnakeInput<FinSetInstance> snake_from_sets(const SnakeSets& s) {
    const FinSetObj a(s.a), c(s.c), a2(s.a2), c2(s.c2), x(s.x), y(s.y), z(s.z);
    const FinSetObj b = set_union(a, c), b2 = set_union(a2, c2);
    SnakeInput<FinSetInstance> in;
    in.a_b = SetHor(inclusion(a, b));
    in.c_b = SetVer(inclusion(c, b));
    in.x_y = SetHor(inclusion(x, y));
    in.z_y = SetVer(inclusion(z, y));
    in.a2_b2 = SetHor(inclusion(a2, b2));
    in.c2_b2 = SetVer(inclusion(c2, b2));
    in.x_a = SetVer(inclusion(x, a));
    in.x_a2 = SetHor(inclusion(x, a2));
    in.y_b = SetVer(inclusion(y, b));
    in.y_b2 = SetHor(inclusion(y, b2));
    in.z_c = SetVer(inclusion(z, c));
    in.z_c2 = SetHor(inclusion(z, c2));
    return in;
}

}  // namespace

SnakeInput<FinSetInstance> gen_snake_input(Rng& rng, std::size_t max_size) {
    return snake_from_sets(random_snake_sets(rng, max_size));
}

StrongSnakeInput<FinSetInstance> gen_strong_snake_input(Rng& rng, std::size_t max_size) {
    const auto sets = random_snake_sets(rng, max_size);
    StrongSnakeInput<FinSetInstance> in{snake_from_sets(sets), {}, {}};
    auto outer = sets.a;
    for (std::size_t j = 0, n = uniform(rng, 0, 2); j < n; ++j) outer.push_back("o" + std::to_string(j));
    auto outer2 = sets.c2;
    for (std::size_t j = 0, n = uniform(rng, 0, 2); j < n; ++j) outer2.push_back("w" + std::to_string(j));
    in.abar_a = SetVer(inclusion(FinSetObj(sets.a), FinSetObj(outer)));
    in.cbar_c = SetHor(inclusion(FinSetObj(sets.c2), FinSetObj(outer2)));
    return in;
}

FpMatrix random_full_rank(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    for (int attempt = 0; attempt < GenConfig::max_attempts; ++attempt) {
        FpMatrix m(rows, cols, p);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entry(rng));
        if (m.rank() == std::min(rows, cols)) return m;
    }
    throw GenerationError("random_full_rank: no full-rank sample");
}

ChainComplex<LinearInstance> gen_linear_complex(Rng& rng, const GenConfig& cfg) {
    LinearInstance lin(cfg.p);
    const int len = static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(std::max(1, cfg.max_support))));
    const auto n = static_cast<std::size_t>(len);
    std::vector<std::size_t> dims(n);
    for (auto& d : dims) d = uniform(rng, 0, cfg.max_size);
    std::vector<std::size_t> b(n + 1, 0);  // b[k] = dim Xbar_{lo+k}
    for (std::size_t k = n; k-- > 1;) b[k] = uniform(rng, 0, std::min(dims[k] - b[k + 1], dims[k - 1]));
    ChainComplex<LinearInstance> x{lin, cfg.lo, {}, {}};
    for (auto d : dims) x.objects.push_back(lin.space(d));
    std::vector<FpMatrix> lower(n + 1);  // lower[k]: Xbar_{lo+k} >-> X_{lo+k-1}
    for (std::size_t k = 1; k < n; ++k) lower[k] = random_full_rank(rng, dims[k - 1], b[k], cfg.p);
    for (std::size_t k = 1; k < n; ++k) {
        FpMatrix left = FpMatrix::identity(dims[k], cfg.p);
        if (k + 1 < n) left = lower[k + 1].transpose().null_space().transpose();
        const FpMatrix r = random_full_rank(rng, b[k], left.rows(), cfg.p);
        x.transitions.push_back({lin.space(b[k]), lin.epi(r * left), lin.mono(lower[k])});
    }
    return x;
}

}  // namespace acgw
